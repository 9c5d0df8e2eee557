#include "fockwit/ppt_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "fockwit/error.hpp"

namespace fockwit {

namespace {

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One unitary rotation in the (p,q) plane zeroing a(p,q). The rotation is
// U = D G with D = diag(.., e^{-i theta} at q, ..) making a(p,q) real and G
// the real symmetric Jacobi rotation of that 2x2 block.
void rotate(Eigen::MatrixXcd& a, Eigen::MatrixXcd& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i theta}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex u_pp{c, 0.0};
  const Complex u_pq{s, 0.0};
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  // A <- A U (columns p, q)
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  // A <- U^dag A (rows p, q)
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // V <- V U
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

}  // namespace

Spectrum hermitian_eigenvalues(const Eigen::MatrixXcd& h, const JacobiOptions& opts) {
  if (h.rows() != h.cols()) {
    throw InvalidArgument("eigensolver needs a square matrix");
  }
  const auto n = static_cast<std::size_t>(h.rows());
  if (n == 0) {
    throw InvalidArgument("eigensolver needs a non-empty matrix");
  }
  if (n > opts.max_dim) {
    throw OracleCapExceeded("matrix dimension " + std::to_string(n) +
                            " exceeds dense oracle cap " + std::to_string(opts.max_dim));
  }
  if (!h.allFinite()) {
    throw InvalidArgument("eigensolver input must be finite");
  }
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > opts.hermitian_tol) {
    throw InvalidArgument("eigensolver input is not Hermitian (deviation " +
                          std::to_string(asym) + ")");
  }

  Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
  const double scale = a.norm();
  const double target = opts.rel_tol * scale;

  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps >= opts.max_sweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < a.rows(); ++p) {
      for (Eigen::Index q = p + 1; q < a.rows(); ++q) {
        rotate(a, v, p, q);
      }
    }
    ++sweeps;
  }

  Spectrum out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  }

  const Eigen::MatrixXcd recon =
      v * a.diagonal().real().cast<Complex>().asDiagonal() * v.adjoint();
  out.residual = (recon - h).cwiseAbs().maxCoeff();
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

  const double unit = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double eig_sum = std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), 0.0);
  if (std::abs(eig_sum - h.trace().real()) > 1e-10 * unit * static_cast<double>(n)) {
    throw NumericalError("eigenvalue sum does not match trace");
  }
  if (out.residual > 1e-9 * unit) {
    throw NumericalError("spectral reconstruction residual " +
                         std::to_string(out.residual) + " exceeds 1e-9");
  }
  return out;
}

PptAnalysis ppt_analysis(const DensityOperator& rho, std::size_t mode,
                         const JacobiOptions& opts) {
  if (rho.dim() > opts.max_dim) {
    throw OracleCapExceeded("state dimension " + std::to_string(rho.dim()) +
                            " exceeds dense oracle cap " + std::to_string(opts.max_dim));
  }
  const DenseOperator pt = partial_transpose(rho, mode);
  const Spectrum spec = hermitian_eigenvalues(pt.matrix, opts);
  double neg = 0.0;
  for (double l : spec.eigenvalues) {
    if (l < 0.0) neg -= l;
  }
  const double min_eig = spec.eigenvalues.front();
  return PptAnalysis{min_eig, neg, min_eig >= -kSpectralTol, spec.residual, spec.sweeps};
}

double ppt_min_eigenvalue(const DensityOperator& rho, std::size_t mode,
                          const JacobiOptions& opts) {
  return ppt_analysis(rho, mode, opts).min_eigenvalue;
}

double negativity(const DensityOperator& rho, std::size_t mode, const JacobiOptions& opts) {
  return ppt_analysis(rho, mode, opts).negativity;
}

}  // namespace fockwit
