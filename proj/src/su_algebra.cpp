#include "fockwit/su_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fockwit/error.hpp"

namespace fockwit {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_two_modes(const FockSpace& space) {
  if (space.modes() != 2) {
    throw InvalidArgument("generators need a two-mode space, got " +
                          std::to_string(space.modes()) + " modes");
  }
}

double column_restricted_max(const LinearOperator& op, const std::vector<bool>& mask) {
  double worst = 0.0;
  const SparseMatrix& m = op.matrix();
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (mask[static_cast<std::size_t>(it.col())]) {
        worst = std::max(worst, std::abs(it.value()));
      }
    }
  }
  return worst;
}

}  // namespace

GeneratorSet su2_generators(const FockSpace& space) {
  require_two_modes(space);
  const LinearOperator a = annihilation_op(space, 0);
  const LinearOperator b = annihilation_op(space, 1);
  const LinearOperator ad_b = compose(adjoint(a), b);
  const LinearOperator a_bd = compose(a, adjoint(b));
  return GeneratorSet{
      AlgebraKind::su2,
      Complex(0.5) * (ad_b + a_bd),
      Complex(0.0, -0.5) * (ad_b - a_bd),
      Complex(0.5) * (number_op(space, 0) - number_op(space, 1)),
  };
}

GeneratorSet su11_generators(const FockSpace& space) {
  require_two_modes(space);
  const LinearOperator a = annihilation_op(space, 0);
  const LinearOperator b = annihilation_op(space, 1);
  const LinearOperator ab = compose(a, b);
  const LinearOperator ad_bd = adjoint(ab);
  return GeneratorSet{
      AlgebraKind::su11,
      Complex(0.5) * (ad_bd + ab),
      Complex(0.0, -0.5) * (ad_bd - ab),
      Complex(0.5) * (number_op(space, 0) + number_op(space, 1) + identity_op(space)),
  };
}

LinearOperator k_phi(const FockSpace& space, double phi) {
  require_two_modes(space);
  const LinearOperator ab = compose(annihilation_op(space, 0), annihilation_op(space, 1));
  const Complex phase = std::polar(1.0, phi);
  return Complex(0.5) * (phase * adjoint(ab) + std::conj(phase) * ab);
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
  return compose(a, b) - compose(b, a);
}

std::vector<std::size_t> safe_subspace(const FockSpace& space, int margin) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    bool ok = true;
    for (std::size_t m = 0; m < space.modes() && ok; ++m) {
      ok = space.occupation(i, m) <= space.cutoffs()[m] - margin;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

double algebra_residual(const GeneratorSet& gens, bool restrict_to_safe) {
  const FockSpace& space = gens.x.space();
  for (int c : space.cutoffs()) {
    if (c < 4) {
      throw InvalidArgument("algebra_residual needs every cutoff >= 4");
    }
  }
  std::vector<bool> mask(space.dim(), !restrict_to_safe);
  if (restrict_to_safe) {
    for (std::size_t i : safe_subspace(space)) mask[i] = true;
  }

  // SU(2): [X,Y]=iZ, [Y,Z]=iX, [Z,X]=iY.  SU(1,1): [X,Y]=-iZ, the rest as SU(2).
  const Complex xy_sign = gens.kind == AlgebraKind::su2 ? kI : -kI;
  const LinearOperator r1 = commutator(gens.x, gens.y) - xy_sign * gens.z;
  const LinearOperator r2 = commutator(gens.y, gens.z) - kI * gens.x;
  const LinearOperator r3 = commutator(gens.z, gens.x) - kI * gens.y;
  return std::max({column_restricted_max(r1, mask), column_restricted_max(r2, mask),
                   column_restricted_max(r3, mask)});
}

}  // namespace fockwit
