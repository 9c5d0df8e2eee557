#pragma once

#include <complex>
#include <cstddef>

#include "fockwit/operators.hpp"
#include "fockwit/states.hpp"

namespace fockwit {

/// An expectation value. For Hermitian inputs the imaginary part is pure
/// rounding noise and is recorded in `imag_residual`.
struct MomentValue {
  Complex value;
  bool hermitian_input = false;
  double imag_residual = 0.0;

  double real() const noexcept { return value.real(); }
};

MomentValue expectation(const StateVector& psi, const LinearOperator& op);
MomentValue expectation(const DensityOperator& rho, const LinearOperator& op);
MomentValue expectation(const State& state, const LinearOperator& op);

struct VarianceResult {
  double value;    // clamped at 0
  double raw;      // <O^2> - <O>^2 before clamping
  bool clamped;
};

inline constexpr double kVarianceClampTol = 1e-10;

/// <O^2> - <O>^2 for Hermitian O. Values in [-1e-10, 0) are clamped to 0;
/// anything more negative is a NumericalError.
VarianceResult variance_detail(const State& state, const LinearOperator& op);
double variance(const StateVector& psi, const LinearOperator& op);
double variance(const DensityOperator& rho, const LinearOperator& op);
double variance(const State& state, const LinearOperator& op);

/// sqrt(Var A) * sqrt(Var B).
double uncertainty_product(const State& state, const LinearOperator& a,
                           const LinearOperator& b);

/// Tr[rho^{T_mode} O]. Also evaluates Tr[rho O^{T_mode}] and throws
/// NumericalError if the two disagree beyond 1e-12 (relative to scale).
MomentValue pt_expectation(const DensityOperator& rho, const LinearOperator& op,
                           std::size_t mode);

/// Population on basis states with any occupation >= cutoff - 2.
double truncation_leakage(const StateVector& psi);
double truncation_leakage(const DensityOperator& rho);
double truncation_leakage(const State& state);

struct LeakagePolicy {
  double warn = 1e-8;
  double error = 1e-4;
};

enum class LeakageLevel { ok, warn, error };

LeakageLevel classify_leakage(double leakage, const LeakagePolicy& policy);

}  // namespace fockwit
