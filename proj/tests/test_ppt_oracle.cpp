#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "fockwit/cross_check.hpp"
#include "fockwit/error.hpp"
#include "fockwit/ppt_oracle.hpp"
#include "fockwit/state_catalog.hpp"
#include "helpers.hpp"

using namespace fockwit;
using fockwit::test::space2;

namespace {

// Closed form for [[a, b], [conj(b), d]].
std::pair<double, double> eig2(double a, Complex b, double d) {
  const double m = (a + d) / 2;
  const double r = std::sqrt((a - d) * (a - d) / 4 + std::norm(b));
  return {m - r, m + r};
}

Eigen::VectorXd reference(const Eigen::MatrixXcd& h) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace

TEST_CASE("small closed-form spectra") {
  const auto id = hermitian_eigenvalues(Eigen::MatrixXcd::Identity(4, 4));
  for (double e : id.eigenvalues) CHECK(e == 1.0);

  Eigen::MatrixXcd x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const auto sx = hermitian_eigenvalues(x);
  CHECK(std::abs(sx.eigenvalues[0] + 1.0) < 1e-12);
  CHECK(std::abs(sx.eigenvalues[1] - 1.0) < 1e-12);

  Eigen::MatrixXcd y(2, 2);
  y << 1.0, Complex(0, 1), Complex(0, -1), 1.0;
  const auto sy = hermitian_eigenvalues(y);
  CHECK(std::abs(sy.eigenvalues[0]) < 1e-12);
  CHECK(std::abs(sy.eigenvalues[1] - 2.0) < 1e-12);

  // Complex 2x2 block with spectrum {1, 3} next to a lone -1.
  Eigen::MatrixXcd t(3, 3);
  t << 2.0, Complex(0, 1), 0.0, Complex(0, -1), 2.0, 0.0, 0.0, 0.0, -1.0;
  const auto st = hermitian_eigenvalues(t);
  CHECK(std::abs(st.eigenvalues[0] + 1.0) < 1e-12);
  CHECK(std::abs(st.eigenvalues[1] - 1.0) < 1e-12);
  CHECK(std::abs(st.eigenvalues[2] - 3.0) < 1e-12);
}

TEST_CASE("random 2x2 Hermitian matrices match the closed form") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    const double a = g(rng), d = g(rng);
    const Complex b(g(rng), g(rng));
    Eigen::MatrixXcd h(2, 2);
    h << a, b, std::conj(b), d;
    const auto [lo, hi] = eig2(a, b, d);
    const auto sp = hermitian_eigenvalues(h);
    CHECK(std::abs(sp.eigenvalues[0] - lo) < 1e-12);
    CHECK(std::abs(sp.eigenvalues[1] - hi) < 1e-12);
  }
}

TEST_CASE("random 64x64 Hermitian matrices") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 3; ++k) {
    const Eigen::MatrixXcd h = fockwit::test::random_hermitian(64, rng);
    const auto sp = hermitian_eigenvalues(h);
    CHECK(sp.residual <= 1e-9);
    CHECK(std::is_sorted(sp.eigenvalues.begin(), sp.eigenvalues.end()));
    const Eigen::VectorXd ref = reference(h);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) worst = std::max(worst, std::abs(sp.eigenvalues[i] - ref(i)));
    CHECK(worst < 1e-10);
    double sum = 0.0;
    for (double e : sp.eigenvalues) sum += e;
    CHECK(std::abs(sum - h.trace().real()) < 1e-10);
  }
}

TEST_CASE("eigensolver rejects bad input") {
  Eigen::MatrixXcd nh(2, 2);
  nh << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(nh), InvalidArgument);
  CHECK_THROWS_AS(hermitian_eigenvalues(Eigen::MatrixXcd::Zero(2, 3)), InvalidArgument);
  JacobiOptions small;
  small.max_dim = 8;
  CHECK_THROWS_AS(hermitian_eigenvalues(Eigen::MatrixXcd::Identity(9, 9), small),
                  OracleCapExceeded);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), InvalidArgument);
  std::mt19937_64 rng(1);
  JacobiOptions one_sweep;
  one_sweep.max_sweeps = 1;
  CHECK_THROWS_AS(hermitian_eigenvalues(fockwit::test::random_hermitian(20, rng), one_sweep),
                  NumericalError);
}

TEST_CASE("density operator spectra lie in [0, 1]") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const auto rho = fockwit::test::random_density(space2(4, 4), rng);
    const auto sp = hermitian_eigenvalues(rho.matrix());
    CHECK(sp.eigenvalues.front() >= -1e-10);
    CHECK(sp.eigenvalues.back() <= 1 + 1e-10);
  }
}

TEST_CASE("PPT test on catalog states") {
  const auto bell = density_from_pure(bell_su2(space2(6, 6)));
  CHECK(std::abs(ppt_min_eigenvalue(bell, 1) + 0.5) < 1e-10);
  CHECK(std::abs(negativity(bell, 1) - 0.5) < 1e-10);
  CHECK(std::abs(negativity(bell, 0) - 0.5) < 1e-10);

  const auto t = density_from_pure(tmsv(space2(20, 20), 0.5));
  CHECK(ppt_min_eigenvalue(t, 1) < -0.1);
  const auto a = ppt_analysis(t, 1);
  CHECK_FALSE(a.ppt);
  // Pure state with Schmidt coefficients c_n: negativity ((sum c_n)^2 - 1)/2.
  // Here c_n is proportional to x^n for n < 20.
  const double x = 0.5;
  const double sum_c = (1 - std::pow(x, 20)) / (1 - x);
  const double norm2 = (1 - std::pow(x, 40)) / (1 - x * x);
  CHECK(std::abs(a.negativity - (sum_c * sum_c / norm2 - 1) / 2) < 1e-10);
  CHECK(std::abs(a.negativity - 1.0) < 1e-5);

  const auto prod = density_from_pure(coherent_product(space2(12, 12), std::vector<Complex>{0.4, 0.2}));
  CHECK(negativity(prod, 1) <= 1e-10);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = random_separable(space2(5, 5), seed, 3);
    CHECK(ppt_min_eigenvalue(rho, 1) >= -1e-10);
    CHECK(ppt_analysis(rho, 1).ppt);
  }
}

TEST_CASE("negativity of a noisy Bell state is strictly between 0 and 1/2") {
  const FockSpace s = space2(2, 2);
  const auto bell = density_from_pure(bell_su2(s));
  // Maximally mixed on the {|01>, |10>} support.
  Eigen::MatrixXcd support = Eigen::MatrixXcd::Zero(4, 4);
  support(1, 1) = 0.5;
  support(2, 2) = 0.5;
  const auto noise = DensityOperator::from_matrix(s, support);
  const auto rho = mix(std::vector<double>{0.5, 0.5}, std::vector<DensityOperator>{bell, noise});
  const double n = negativity(rho, 1);
  CHECK(n > 0.0);
  CHECK(n < 0.5);
  // The transposed coherence sits on the empty |00>,|11> block: eigenvalues +/-1/4.
  CHECK(std::abs(n - 0.25) < 1e-12);
}

TEST_CASE("cross_check") {
  const auto b = cross_check(bell_su2(space2(6, 6)));
  CHECK(b.consistent());
  CHECK_FALSE(b.violated.empty());
  CHECK(b.ppt.negativity == doctest::Approx(0.5));

  const auto r = cross_check(random_separable(space2(5, 5), 11, 4));
  CHECK(r.consistent());
  CHECK(r.violated.empty());
  CHECK(r.ppt.negativity <= 1e-10);

  const auto t = cross_check(tmsv(space2(16, 16), 0.5));
  CHECK(t.consistent());
  CHECK(std::find(t.violated.begin(), t.violated.end(), "hz_su11") != t.violated.end());
  CHECK(t.ppt.negativity > 0.0);

  CHECK_THROWS_AS(cross_check(three_mode_hz(make_space(3, {3, 3, 3}))), InvalidArgument);
}
