#pragma once

#include <cstddef>
#include <span>
#include <variant>

#include <Eigen/Dense>

#include "fockwit/fock_space.hpp"
#include "fockwit/operators.hpp"

namespace fockwit {

/// Normalized pure state. The constructor rescales the amplitudes to unit
/// norm; a zero or non-finite vector is rejected.
class StateVector {
 public:
  StateVector(FockSpace space, Eigen::VectorXcd amplitudes);

  const FockSpace& space() const noexcept { return space_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return space_.dim(); }

 private:
  FockSpace space_;
  Eigen::VectorXcd amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on a Fock space.
class DensityOperator {
 public:
  struct Tolerances {
    double hermitian = 1e-12;
    double trace = 1e-12;
    double min_eigenvalue = -1e-10;
  };

  /// Validates all three invariants (the PSD check is a full eigensolve).
  static DensityOperator from_matrix(FockSpace space, Eigen::MatrixXcd matrix,
                                     const Tolerances& tol);
  static DensityOperator from_matrix(FockSpace space, Eigen::MatrixXcd matrix) {
    return from_matrix(std::move(space), std::move(matrix), Tolerances{});
  }

  const FockSpace& space() const noexcept { return space_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return space_.dim(); }

 private:
  DensityOperator(FockSpace space, Eigen::MatrixXcd matrix)
      : space_(std::move(space)), matrix_(std::move(matrix)) {}

  friend DensityOperator density_from_pure(const StateVector&);
  friend DensityOperator mix(std::span<const double>, std::span<const DensityOperator>);
  friend DensityOperator partial_trace(const DensityOperator&,
                                       std::span<const std::size_t>);

  FockSpace space_;
  Eigen::MatrixXcd matrix_;
};

/// Dense matrix on a Fock space with no positivity guarantee, e.g. a
/// partially transposed density matrix.
struct DenseOperator {
  FockSpace space;
  Eigen::MatrixXcd matrix;
};

using State = std::variant<StateVector, DensityOperator>;

const FockSpace& space_of(const State& state);

DensityOperator density_from_pure(const StateVector& psi);

/// Convex combination; weights must be nonnegative and sum to 1 within 1e-12.
DensityOperator mix(std::span<const double> weights,
                    std::span<const DensityOperator> densities);

/// Pure states are promoted to |psi><psi|.
DensityOperator to_density(const State& state);

/// Element [(i_m..),(j_m..)] moves to [(j_m..),(i_m..)] for the selected mode.
/// Exact index permutation: an involution that preserves trace and Hermiticity.
DenseOperator partial_transpose(const DensityOperator& rho, std::size_t mode);
DenseOperator partial_transpose(const DenseOperator& op, std::size_t mode);

/// Reduced state on `keep_modes` (any order, no duplicates); the reduced
/// space lists the kept modes in ascending order.
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> keep_modes);

/// Tr[rho^2].
double purity(const DensityOperator& rho);

}  // namespace fockwit
