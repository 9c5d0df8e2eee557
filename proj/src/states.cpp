#include "fockwit/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fockwit/error.hpp"

namespace fockwit {

StateVector::StateVector(FockSpace space, Eigen::VectorXcd amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(space_.dim())) {
    throw InvalidArgument("amplitude vector length " + std::to_string(amplitudes_.size()) +
                          " does not match space dimension " +
                          std::to_string(space_.dim()));
  }
  if (!amplitudes_.allFinite()) {
    throw InvalidArgument("state amplitudes must be finite");
  }
  const double norm = amplitudes_.norm();
  if (norm == 0.0) {
    throw InvalidArgument("cannot normalize the zero vector");
  }
  amplitudes_ /= norm;
}

DensityOperator DensityOperator::from_matrix(FockSpace space, Eigen::MatrixXcd matrix,
                                             const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  if (matrix.rows() != n || matrix.cols() != n) {
    throw InvalidArgument("density matrix shape does not match space dimension");
  }
  if (!matrix.allFinite()) {
    throw InvalidArgument("density matrix entries must be finite");
  }
  const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.hermitian) {
    throw InvalidArgument("density matrix is not Hermitian (deviation " +
                          std::to_string(asym) + ")");
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace) {
    throw InvalidArgument("density matrix trace is " + std::to_string(tr.real()) +
                          ", expected 1");
  }
  // Symmetrize before the eigensolve so the solver sees an exactly Hermitian input.
  Eigen::MatrixXcd sym = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed while validating density matrix");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < tol.min_eigenvalue) {
    throw InvalidArgument("density matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(min_eig) + ")");
  }
  return DensityOperator(std::move(space), std::move(matrix));
}

const FockSpace& space_of(const State& state) {
  return std::visit([](const auto& s) -> const FockSpace& { return s.space(); }, state);
}

DensityOperator density_from_pure(const StateVector& psi) {
  const Eigen::VectorXcd& v = psi.amplitudes();
  return DensityOperator(psi.space(), v * v.adjoint());
}

DensityOperator mix(std::span<const double> weights,
                    std::span<const DensityOperator> densities) {
  if (weights.empty() || weights.size() != densities.size()) {
    throw InvalidArgument("mix needs one weight per density operator");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw InvalidArgument("mixture weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidArgument("mixture weights sum to " + std::to_string(total) +
                          ", expected 1");
  }
  Eigen::MatrixXcd m = weights[0] * densities[0].matrix();
  for (std::size_t k = 1; k < densities.size(); ++k) {
    require_same_space(densities[0].space(), densities[k].space());
    m += weights[k] * densities[k].matrix();
  }
  return DensityOperator(densities[0].space(), std::move(m));
}

DensityOperator to_density(const State& state) {
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    return density_from_pure(*psi);
  }
  return std::get<DensityOperator>(state);
}

namespace {

Eigen::MatrixXcd transpose_mode(const FockSpace& space, const Eigen::MatrixXcd& m,
                                std::size_t mode) {
  space.check_mode(mode);
  const auto stride = static_cast<Eigen::Index>(space.stride(mode));
  const auto n = static_cast<Eigen::Index>(space.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const int oj = space.occupation(static_cast<std::size_t>(j), mode);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int oi = space.occupation(static_cast<std::size_t>(i), mode);
      const Eigen::Index shift = static_cast<Eigen::Index>(oj - oi) * stride;
      out(i + shift, j - shift) = m(i, j);
    }
  }
  return out;
}

}  // namespace

DenseOperator partial_transpose(const DensityOperator& rho, std::size_t mode) {
  return DenseOperator{rho.space(), transpose_mode(rho.space(), rho.matrix(), mode)};
}

DenseOperator partial_transpose(const DenseOperator& op, std::size_t mode) {
  return DenseOperator{op.space, transpose_mode(op.space, op.matrix, mode)};
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const std::size_t> keep_modes) {
  const FockSpace& space = rho.space();
  if (keep_modes.empty()) {
    throw InvalidArgument("partial_trace needs at least one mode to keep");
  }
  std::vector<std::size_t> keep(keep_modes.begin(), keep_modes.end());
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw InvalidArgument("partial_trace keep_modes contains duplicates");
  }
  for (std::size_t m : keep) space.check_mode(m);

  std::vector<bool> kept(space.modes(), false);
  std::vector<int> kept_cutoffs;
  std::vector<int> traced_cutoffs;
  for (std::size_t m : keep) kept[m] = true;
  for (std::size_t m = 0; m < space.modes(); ++m) {
    (kept[m] ? kept_cutoffs : traced_cutoffs).push_back(space.cutoffs()[m]);
  }
  FockSpace reduced_space(kept_cutoffs, space.dim());

  std::size_t traced_dim = 1;
  for (int c : traced_cutoffs) traced_dim *= static_cast<std::size_t>(c);

  // Split every full index into (kept index, traced index), both row-major.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups(traced_dim);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t m = 0; m < space.modes(); ++m) {
      const auto c = static_cast<std::size_t>(space.cutoffs()[m]);
      const auto o = static_cast<std::size_t>(space.occupation(i, m));
      if (kept[m]) {
        k = k * c + o;
      } else {
        t = t * c + o;
      }
    }
    groups[t].emplace_back(i, k);
  }

  const auto rd = static_cast<Eigen::Index>(reduced_space.dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rd, rd);
  const Eigen::MatrixXcd& m = rho.matrix();
  for (const auto& group : groups) {
    for (const auto& [i, ki] : group) {
      for (const auto& [j, kj] : group) {
        out(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(kj)) +=
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return DensityOperator(std::move(reduced_space), std::move(out));
}

double purity(const DensityOperator& rho) {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

}  // namespace fockwit
