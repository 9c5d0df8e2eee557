#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fockwit/error.hpp"
#include "fockwit/state_catalog.hpp"
#include "fockwit/witnesses.hpp"
#include "helpers.hpp"

using namespace fockwit;
using fockwit::test::space2;

namespace {

constexpr double kTol = 1e-9;

State vacuum() { return fock(space2(30, 30), std::vector<int>{0, 0}); }
State bell2() { return bell_su2(space2(6, 6)); }
State bell11() { return bell_su11(space2(6, 6)); }

void check_values(const WitnessReport& r, double lhs, double rhs, Verdict v) {
  INFO(r.name);
  CHECK(std::abs(r.lhs - lhs) < kTol);
  CHECK(std::abs(r.rhs - rhs) < kTol);
  CHECK(r.margin == r.lhs - r.rhs);
  CHECK(r.verdict == v);
}

}  // namespace

TEST_CASE("margin classification") {
  CHECK(classify_margin(0.0, 1e-9) == Verdict::boundary);
  CHECK(classify_margin(1e-9, 1e-9) == Verdict::boundary);
  CHECK(classify_margin(-1e-9, 1e-9) == Verdict::boundary);
  CHECK(classify_margin(2e-9, 1e-9) == Verdict::satisfied);
  CHECK(classify_margin(-2e-9, 1e-9) == Verdict::violated);
  CHECK(classify_margin(-0.5, 1.0) == Verdict::boundary);
}

TEST_CASE("su2_uncertainty") {
  const auto r = su2_uncertainty(bell2());
  check_values(r, 0.0, 0.0, Verdict::boundary);
  CHECK(r.kind == WitnessKind::physicality);
  check_values(su2_uncertainty(fock(space2(6, 6), std::vector<int>{1, 0})), 0.25, 0.25,
               Verdict::boundary);
  CHECK(su2_uncertainty(random_pure(space2(8, 8), 7)).margin >= -kTol);
}

TEST_CASE("su11_uncertainty") {
  check_values(su11_uncertainty(vacuum()), 0.25, 0.25, Verdict::boundary);
  for (double x : {0.1, 0.3, 0.5, 0.6}) {
    CHECK(su11_uncertainty(tmsv(space2(30, 30), x)).verdict == Verdict::boundary);
  }
  CHECK(su11_uncertainty(random_pure(space2(8, 8), 7)).margin >= -kTol);
}

TEST_CASE("pt_su11_product") {
  const auto weak = pt_su11_product(bell2());
  check_values(weak, 0.0, 0.25, Verdict::violated);
  CHECK(weak.kind == WitnessKind::separability);

  // (|00> + |11>)/sqrt(2): dSx^2 = dSy^2 = 1/2 and <Na + Nb> = 1.
  check_values(pt_su11_product(bell11(), PtVariant::weak), 0.5, 0.25, Verdict::satisfied);
  const auto strict = pt_su11_product(bell11(), PtVariant::strict);
  check_values(strict, 0.5, 0.75, Verdict::violated);
  CHECK(strict.name == "pt_su11_product_strict");
  CHECK(strict.kind == WitnessKind::diagnostic);

  // The strict form fails on the vacuum, which is why it is not a criterion.
  check_values(pt_su11_product(vacuum(), PtVariant::strict), 0.0, 0.5, Verdict::violated);
  check_values(pt_su11_product(vacuum()), 0.0, 0.0, Verdict::boundary);

  const auto coh = pt_su11_product(coherent_product(space2(30, 30), std::vector<Complex>{0.5, 0.3}));
  CHECK(coh.margin >= -kTol);
  CHECK(coh.verdict != Verdict::violated);
}

TEST_CASE("sum_variance") {
  check_values(sum_variance(bell2()), 0.25, 0.5, Verdict::violated);
  check_values(sum_variance(vacuum()), 0.0, 0.0, Verdict::boundary);
  CHECK(sum_variance(random_separable(space2(6, 6), 3, 4)).verdict == Verdict::satisfied);
}

TEST_CASE("factorization_gap") {
  const auto coh = factorization_gap(
      coherent_product(space2(30, 30), std::vector<Complex>{Complex(0.4, 0.1), 0.7}));
  // lhs = |<ab^dag>|^2, rhs = |<a><b^dag>|^2, margin = the gap.
  CHECK(std::abs(coh.margin) < 1e-10);
  CHECK(coh.kind == WitnessKind::diagnostic);
  check_values(factorization_gap(bell2()), 0.25, 0.0, Verdict::satisfied);
  CHECK(factorization_gap(vacuum()).margin == 0.0);
}

TEST_CASE("pt_su2_product") {
  const auto v = pt_su2_product(vacuum());
  check_values(v, 0.25, 0.25, Verdict::boundary);
  CHECK(v.kind == WitnessKind::diagnostic);
  REQUIRE(v.reference_rhs.has_value());
  CHECK(*v.reference_rhs == doctest::Approx(0.25));
  check_values(pt_su2_product(fock(space2(6, 6), std::vector<int>{0, 1})), 0.5, 0.5,
               Verdict::boundary);
}

TEST_CASE("hz_su2") {
  check_values(hz_su2(bell2()), -0.25, 0.0, Verdict::violated);
  check_values(hz_su2(vacuum()), 0.0, 0.0, Verdict::boundary);
  CHECK(hz_su2(coherent_product(space2(30, 30), std::vector<Complex>{0.5, 0.3})).margin >= -kTol);
}

TEST_CASE("hz_su11") {
  const auto t = hz_su11(tmsv(space2(40, 40), 0.5));
  CHECK(std::abs(t.margin - (1.0 / 9.0 - 4.0 / 9.0)) < 1e-8);
  CHECK(t.verdict == Verdict::violated);
  for (double x : {0.1, 0.2, 0.4, 0.6}) {
    CHECK(hz_su11(tmsv(space2(30, 30), x)).verdict == Verdict::violated);
  }
  CHECK(std::abs(hz_su11(coherent_product(space2(30, 30), std::vector<Complex>{0.5, 0.3})).margin) <
        1e-10);
  check_values(hz_su11(vacuum()), 0.0, 0.0, Verdict::boundary);
}

TEST_CASE("hz_three_mode") {
  const FockSpace s = make_space(3, {4, 4, 4});
  check_values(hz_three_mode(three_mode_hz(s)), 0.0, 0.5, Verdict::violated);
  check_values(hz_three_mode(fock(s, std::vector<int>{0, 0, 0})), 0.0, 0.0, Verdict::boundary);
  const FockSpace t = make_space(3, {12, 12, 12}, 2000);
  const auto coh = hz_three_mode(coherent_product(t, std::vector<Complex>{0.3, 0.2, 0.4}));
  CHECK(coh.margin >= -kTol);
  CHECK_THROWS_AS(hz_three_mode(bell2()), InvalidArgument);
  CHECK_THROWS_AS(hz_su2(three_mode_hz(s)), InvalidArgument);
}

TEST_CASE("k_phi_variance") {
  check_values(k_phi_variance(vacuum()), 0.25, 0.25, Verdict::boundary);
  for (double x : {0.1, 0.3, 0.5}) {
    const auto r = k_phi_variance(tmsv(space2(40, 40), x));
    CHECK(std::abs(r.lhs - 0.25) < 1e-8);
    CHECK(r.verdict == Verdict::boundary);
  }
  WitnessConfig cfg;
  cfg.phi = 0.0;
  // K_x on (|00> + |11>)/sqrt(2): <K_x> = 1/2, <K_x^2> = 3/4.
  const auto b = k_phi_variance(bell11(), cfg);
  CHECK(b.lhs == doctest::Approx(0.5));
  CHECK(b.message.find("phi=0") != std::string::npos);
}

TEST_CASE("evaluate_all") {
  SUBCASE("bell_su2") {
    const auto all = evaluate_all(bell2());
    REQUIRE(all.size() == 10);
    auto find = [&](std::string_view n) {
      return *std::find_if(all.begin(), all.end(), [&](const auto& r) { return r.name == n; });
    };
    CHECK(find("pt_su11_product").verdict == Verdict::violated);
    CHECK(find("sum_variance").verdict == Verdict::violated);
    CHECK(find("hz_su2").verdict == Verdict::violated);
    CHECK(find("su2_uncertainty").verdict == Verdict::boundary);
    CHECK(find("hz_three_mode").verdict == Verdict::not_applicable);
    for (const auto& r : all) CHECK(r.name != "pt_su11_product_strict");
  }
  SUBCASE("TMSV(0.5)") {
    const auto all = evaluate_all(tmsv(space2(30, 30), 0.5));
    for (const auto& r : all) {
      if (r.name == "hz_su11") CHECK(r.verdict == Verdict::violated);
      if (r.name == "su11_uncertainty") CHECK(r.verdict == Verdict::boundary);
    }
  }
  SUBCASE("three-mode state") {
    const auto all = evaluate_all(three_mode_hz(make_space(3, {4, 4, 4})));
    for (const auto& r : all) {
      if (r.name == "hz_three_mode") {
        CHECK(r.verdict == Verdict::violated);
      } else {
        CHECK(r.verdict == Verdict::not_applicable);
      }
    }
  }
  SUBCASE("leakage errors are embedded") {
    const auto all = evaluate_all(tmsv(space2(10, 10), 0.9, 1.0));
    for (const auto& r : all) {
      if (r.name == "factorization_gap" || r.name == "hz_three_mode") continue;
      CHECK(r.verdict == Verdict::error);
      CHECK_FALSE(r.message.empty());
    }
  }
}

TEST_CASE("leakage above the error threshold throws") {
  const State s = tmsv(space2(10, 10), 0.9, 1.0);
  CHECK_THROWS_AS(hz_su11(s), LeakageError);
  WitnessConfig loose;
  loose.leakage.error = 1.0;
  const auto r = hz_su11(s, loose);
  CHECK(r.leakage > 1e-2);
}

TEST_CASE("names and lookup") {
  CHECK(witness_names().size() == 11);
  CHECK(is_witness_name("hz_su11"));
  CHECK(is_witness_name("pt_su11_product_strict"));
  CHECK_FALSE(is_witness_name("bogus"));
  CHECK(witness_kind("su2_uncertainty") == WitnessKind::physicality);
  CHECK(witness_kind("k_phi_variance") == WitnessKind::separability);
  CHECK_FALSE(witness_anchor("hz_su2").empty());
  CHECK_THROWS_AS(witness_anchor("bogus"), InvalidArgument);
  CHECK_THROWS_AS(evaluate_witness("bogus", bell2()), InvalidArgument);
  CHECK(evaluate_witness("pt_su11_product_strict", bell11()).verdict == Verdict::violated);
  CHECK(to_string(Verdict::boundary) == "boundary");
  CHECK(to_string(WitnessKind::separability) == "separability");
}

TEST_CASE("physicality witnesses hold on random pure states") {
  const FockSpace s = space2(8, 8);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const State psi = random_pure(s, seed);
    for (const auto& r : evaluate_all(psi)) {
      if (r.verdict == Verdict::not_applicable) continue;
      INFO("seed " << seed << " " << r.name);
      CHECK(std::isfinite(r.lhs));
      CHECK(std::isfinite(r.rhs));
      CHECK(r.margin == r.lhs - r.rhs);
      if (r.kind == WitnessKind::physicality || r.name == "pt_su2_product") {
        CHECK(r.margin >= -kTol);
      }
    }
    CHECK(pt_su11_product(psi, PtVariant::weak).rhs <= pt_su11_product(psi, PtVariant::strict).rhs);
  }
}

TEST_CASE("separability witnesses never fire on separable mixtures") {
  const FockSpace s = space2(6, 6);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const State rho = random_separable(s, seed, 1 + static_cast<int>(seed % 5));
    for (const auto& r : evaluate_all(rho)) {
      if (r.kind != WitnessKind::separability || r.verdict == Verdict::not_applicable) continue;
      INFO("seed " << seed << " " << r.name);
      CHECK(r.margin >= -kTol);
    }
  }
}
