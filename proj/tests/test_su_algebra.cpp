#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fockwit/error.hpp"
#include "fockwit/moments.hpp"
#include "fockwit/state_catalog.hpp"
#include "fockwit/su_algebra.hpp"
#include "helpers.hpp"

using namespace fockwit;
using fockwit::test::basis;
using fockwit::test::space2;

TEST_CASE("SU(2) generators") {
  const FockSpace s = space2(6, 6);
  const auto g = su2_generators(s);
  CHECK(g.kind == AlgebraKind::su2);
  CHECK(is_hermitian(g.x, 1e-12));
  CHECK(is_hermitian(g.y, 1e-12));
  CHECK(is_hermitian(g.z, 1e-12));
  CHECK(expectation(basis(s, {0, 0}), g.z).real() == 0.0);
  CHECK(expectation(basis(s, {1, 0}), g.z).real() == 0.5);

  const StateVector bell = bell_su2(s);
  const Eigen::VectorXcd out = g.x.apply(bell.amplitudes());
  CHECK((out - 0.5 * bell.amplitudes()).norm() < 1e-15);
}

TEST_CASE("SU(1,1) generators") {
  const FockSpace s = space2(6, 6);
  const auto g = su11_generators(s);
  CHECK(g.kind == AlgebraKind::su11);
  CHECK(is_hermitian(g.x, 1e-12));
  CHECK(is_hermitian(g.y, 1e-12));
  CHECK(expectation(basis(s, {0, 0}), g.z).real() == 0.5);
  const Eigen::VectorXcd out = g.x.apply(basis(s, {0, 0}).amplitudes());
  CHECK((out - 0.5 * basis(s, {1, 1}).amplitudes()).norm() < 1e-15);
  // K_z is diagonal.
  const Eigen::MatrixXcd kz = g.z.dense();
  CHECK((kz - Eigen::MatrixXcd(kz.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("K_z on TMSV matches (1/2)(1+x^2)/(1-x^2)") {
  const FockSpace s = space2(40, 40);
  for (double x : {0.1, 0.3, 0.5}) {
    const auto psi = tmsv(s, x);
    const double expect = 0.5 * (1 + x * x) / (1 - x * x);
    CHECK(std::abs(expectation(psi, su11_generators(s).z).real() - expect) < 1e-8);
  }
}

TEST_CASE("generators need two modes") {
  CHECK_THROWS_AS(su2_generators(make_space(3, {3, 3, 3})), InvalidArgument);
  CHECK_THROWS_AS(su11_generators(make_space(1, {3})), InvalidArgument);
  CHECK_THROWS_AS(k_phi(make_space(1, {3}), 0.0), InvalidArgument);
}

TEST_CASE("k_phi") {
  const FockSpace s = space2(6, 6);
  const auto g = su11_generators(s);
  CHECK(max_abs_diff(k_phi(s, 0.0), g.x) == 0.0);
  CHECK(max_abs_diff(k_phi(s, std::numbers::pi), Complex(-1.0) * g.x) < 1e-15);
  // Expanding the definition gives -K_y at pi/2.
  CHECK(max_abs_diff(k_phi(s, std::numbers::pi / 2), Complex(-1.0) * g.y) < 1e-15);
  for (double phi : {0.0, 0.3, 1.0, 2.5, -4.0}) CHECK(is_hermitian(k_phi(s, phi), 1e-14));
}

TEST_CASE("commutators") {
  const FockSpace s = space2(10, 10);
  const auto su2 = su2_generators(s);
  const auto su11 = su11_generators(s);
  CHECK(commutator(su2.x, su2.x).matrix().norm() == 0.0);

  const auto safe = safe_subspace(s);
  auto restricted_diff = [&](const LinearOperator& a, const LinearOperator& b) {
    const Eigen::MatrixXcd d = a.dense() - b.dense();
    double worst = 0.0;
    for (std::size_t c : safe) {
      worst = std::max(worst, d.col(static_cast<Eigen::Index>(c)).cwiseAbs().maxCoeff());
    }
    return worst;
  };
  const Complex i(0, 1);
  CHECK(restricted_diff(commutator(su2.x, su2.y), i * su2.z) < 1e-10);
  CHECK(restricted_diff(commutator(su2.y, su2.z), i * su2.x) < 1e-10);
  CHECK(restricted_diff(commutator(su2.z, su2.x), i * su2.y) < 1e-10);
  CHECK(restricted_diff(commutator(su11.x, su11.y), -i * su11.z) < 1e-10);
  CHECK(restricted_diff(commutator(su11.y, su11.z), i * su11.x) < 1e-10);
  CHECK(restricted_diff(commutator(su11.z, su11.x), i * su11.y) < 1e-10);
  CHECK_THROWS_AS(commutator(su2.x, su2_generators(space2(4, 4)).x), SpaceMismatch);
}

TEST_CASE("safe subspace keeps occupations <= cutoff - 3") {
  const FockSpace s = space2(5, 4);
  const auto safe = safe_subspace(s);
  CHECK(safe.size() == 3 * 2);
  for (std::size_t i : safe) {
    CHECK(s.occupation(i, 0) <= 2);
    CHECK(s.occupation(i, 1) <= 1);
  }
  CHECK(safe_subspace(space2(3, 3)).size() == 1);
  CHECK(safe_subspace(space2(2, 5)).empty());
}

TEST_CASE("algebra residual") {
  CHECK(algebra_residual(su2_generators(space2(10, 10))) < 1e-12);
  CHECK(algebra_residual(su11_generators(space2(10, 10))) < 1e-12);
  CHECK(algebra_residual(su2_generators(space2(4, 4))) < 1e-12);
  CHECK(algebra_residual(su11_generators(space2(4, 4))) < 1e-12);
  // Without the restriction the truncation edge shows up at O(cutoff).
  const double edge = algebra_residual(su11_generators(space2(10, 10)), false);
  CHECK(edge > 1.0);
  CHECK(edge > algebra_residual(su11_generators(space2(6, 6)), false));
  CHECK_THROWS_AS(algebra_residual(su2_generators(space2(3, 10))), InvalidArgument);
}

TEST_CASE("S_z commutes with the SU(2) Casimir on the safe subspace") {
  const FockSpace s = space2(8, 8);
  const auto g = su2_generators(s);
  const auto casimir = g.x * g.x + g.y * g.y + g.z * g.z;
  const Eigen::MatrixXcd c = commutator(g.z, casimir).dense();
  for (std::size_t col : safe_subspace(s)) {
    CHECK(c.col(static_cast<Eigen::Index>(col)).cwiseAbs().maxCoeff() < 1e-10);
  }
}
