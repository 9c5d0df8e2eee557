#pragma once

#include <cstddef>
#include <vector>

#include "fockwit/operators.hpp"

namespace fockwit {

enum class AlgebraKind { su2, su11 };

/// Generator triple on a two-mode space (a = mode 0, b = mode 1).
struct GeneratorSet {
  AlgebraKind kind;
  LinearOperator x;
  LinearOperator y;
  LinearOperator z;
};

/// Schwinger SU(2): S_x = (a^dag b + a b^dag)/2, S_y = (a^dag b - a b^dag)/2i,
/// S_z = (a^dag a - b^dag b)/2.
GeneratorSet su2_generators(const FockSpace& space);

/// Two-mode SU(1,1): K_x = (a^dag b^dag + ab)/2, K_y = (a^dag b^dag - ab)/2i,
/// K_z = (a^dag a + b^dag b + 1)/2.
GeneratorSet su11_generators(const FockSpace& space);

/// K(phi) = (e^{i phi} a^dag b^dag + e^{-i phi} ab)/2. K(0) = K_x and
/// K(pi/2) = -K_y.
LinearOperator k_phi(const FockSpace& space, double phi);

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// Basis indices whose occupations are all <= cutoff - margin. With the
/// default margin of 3 every quadratic product of generators acts exactly.
std::vector<std::size_t> safe_subspace(const FockSpace& space, int margin = 3);

/// Largest |entry| of [X,Y] -/+ iZ and its cyclic partners, over columns in
/// the safe subspace (or the whole space when `restrict_to_safe` is false,
/// which exposes the truncation edge).
double algebra_residual(const GeneratorSet& gens, bool restrict_to_safe = true);

}  // namespace fockwit
