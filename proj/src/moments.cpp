#include "fockwit/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fockwit/error.hpp"

namespace fockwit {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kImagTol = 1e-10;
constexpr double kNormTol = 1e-10;
constexpr double kDualityTol = 1e-12;

MomentValue finish(Complex value, const LinearOperator& op) {
  MomentValue out{value, is_hermitian(op, kHermitianTol), 0.0};
  if (out.hermitian_input) {
    out.imag_residual = std::abs(value.imag());
    if (out.imag_residual > kImagTol) {
      throw NumericalError("expectation of a Hermitian operator has imaginary part " +
                           std::to_string(value.imag()));
    }
  }
  return out;
}

void check_normalized(double norm_sq) {
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    throw InvalidArgument("state is not normalized");
  }
}

// Tr[M O] with O sparse: sum over nonzeros O_ij * M_ji.
Complex trace_product(const Eigen::MatrixXcd& m, const LinearOperator& op) {
  Complex acc{0.0, 0.0};
  const SparseMatrix& o = op.matrix();
  for (Eigen::Index k = 0; k < o.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(o, k); it; ++it) {
      acc += it.value() * m(it.col(), it.row());
    }
  }
  return acc;
}

void require_hermitian(const LinearOperator& op) {
  if (!is_hermitian(op, kHermitianTol)) {
    throw InvalidArgument("variance needs a Hermitian operator");
  }
}

VarianceResult clamp_variance(double raw) {
  if (raw >= 0.0) return {raw, raw, false};
  if (raw >= -kVarianceClampTol) return {0.0, raw, true};
  throw NumericalError("variance is negative beyond tolerance: " + std::to_string(raw));
}

VarianceResult variance_of(const StateVector& psi, const LinearOperator& op) {
  require_same_space(psi.space(), op.space());
  require_hermitian(op);
  check_normalized(psi.amplitudes().squaredNorm());
  const Eigen::VectorXcd v = op.apply(psi.amplitudes());
  const double mean = psi.amplitudes().dot(v).real();
  // ||(O - <O>) psi||^2 avoids the cancellation in <O^2> - <O>^2.
  return clamp_variance((v - mean * psi.amplitudes()).squaredNorm());
}

VarianceResult variance_of(const DensityOperator& rho, const LinearOperator& op) {
  require_same_space(rho.space(), op.space());
  require_hermitian(op);
  const double mean = trace_product(rho.matrix(), op).real();
  const double second = trace_product(rho.matrix(), compose(op, op)).real();
  return clamp_variance(second - mean * mean);
}

bool near_boundary(const FockSpace& space, std::size_t i) {
  for (std::size_t m = 0; m < space.modes(); ++m) {
    if (space.occupation(i, m) >= space.cutoffs()[m] - 2) return true;
  }
  return false;
}

}  // namespace

MomentValue expectation(const StateVector& psi, const LinearOperator& op) {
  require_same_space(psi.space(), op.space());
  check_normalized(psi.amplitudes().squaredNorm());
  // dot() conjugates the first argument.
  return finish(psi.amplitudes().dot(op.apply(psi.amplitudes())), op);
}

MomentValue expectation(const DensityOperator& rho, const LinearOperator& op) {
  require_same_space(rho.space(), op.space());
  check_normalized(rho.matrix().trace().real());
  return finish(trace_product(rho.matrix(), op), op);
}

MomentValue expectation(const State& state, const LinearOperator& op) {
  return std::visit([&](const auto& s) { return expectation(s, op); }, state);
}

VarianceResult variance_detail(const State& state, const LinearOperator& op) {
  return std::visit([&](const auto& s) { return variance_of(s, op); }, state);
}

double variance(const StateVector& psi, const LinearOperator& op) {
  return variance_of(psi, op).value;
}

double variance(const DensityOperator& rho, const LinearOperator& op) {
  return variance_of(rho, op).value;
}

double variance(const State& state, const LinearOperator& op) {
  return variance_detail(state, op).value;
}

double uncertainty_product(const State& state, const LinearOperator& a,
                           const LinearOperator& b) {
  return std::sqrt(variance(state, a)) * std::sqrt(variance(state, b));
}

MomentValue pt_expectation(const DensityOperator& rho, const LinearOperator& op,
                           std::size_t mode) {
  require_same_space(rho.space(), op.space());
  const DenseOperator pt = partial_transpose(rho, mode);
  const Complex direct = trace_product(pt.matrix, op);
  const Complex dual = trace_product(rho.matrix(), partial_transpose_op(op, mode));
  const double scale = std::max(1.0, std::abs(direct));
  if (std::abs(direct - dual) > kDualityTol * scale) {
    throw NumericalError("partial-transpose duality check failed");
  }
  return finish(direct, op);
}

double truncation_leakage(const StateVector& psi) {
  const FockSpace& space = psi.space();
  double mass = 0.0;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (near_boundary(space, i)) {
      mass += std::norm(psi.amplitudes()[static_cast<Eigen::Index>(i)]);
    }
  }
  return mass;
}

double truncation_leakage(const DensityOperator& rho) {
  const FockSpace& space = rho.space();
  double mass = 0.0;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (near_boundary(space, i)) {
      const auto k = static_cast<Eigen::Index>(i);
      mass += rho.matrix()(k, k).real();
    }
  }
  return mass;
}

double truncation_leakage(const State& state) {
  return std::visit([](const auto& s) { return truncation_leakage(s); }, state);
}

LeakageLevel classify_leakage(double leakage, const LeakagePolicy& policy) {
  if (leakage > policy.error) return LeakageLevel::error;
  if (leakage > policy.warn) return LeakageLevel::warn;
  return LeakageLevel::ok;
}

}  // namespace fockwit
