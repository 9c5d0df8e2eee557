#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockwit/states.hpp"

namespace fockwit {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max |A - V diag(lambda) V^dag|
  int sweeps = 0;
};

struct JacobiOptions {
  /// Converged once the off-diagonal Frobenius norm is below rel_tol * ||A||_F.
  double rel_tol = 1e-14;
  int max_sweeps = 100;
  double hermitian_tol = 1e-10;
  std::size_t max_dim = 1024;
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Checks the trace and reconstruction invariants before returning.
Spectrum hermitian_eigenvalues(const Eigen::MatrixXcd& h, const JacobiOptions& opts = {});

double ppt_min_eigenvalue(const DensityOperator& rho, std::size_t mode,
                          const JacobiOptions& opts = {});

/// Sum of |lambda| over the negative eigenvalues of rho^{T_mode}.
double negativity(const DensityOperator& rho, std::size_t mode,
                  const JacobiOptions& opts = {});

inline constexpr double kSpectralTol = 1e-10;

struct PptAnalysis {
  double min_eigenvalue;
  double negativity;
  bool ppt;           // min_eigenvalue >= -kSpectralTol
  double residual;
  int sweeps;
};

PptAnalysis ppt_analysis(const DensityOperator& rho, std::size_t mode,
                         const JacobiOptions& opts = {});

}  // namespace fockwit
