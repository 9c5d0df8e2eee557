#pragma once

#include <stdexcept>
#include <string>

namespace fockwit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cutoffs, out-of-range occupations, unknown names,
/// parameters outside a family's documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands built on different Fock spaces.
class SpaceMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Probability mass near the truncation boundary exceeds the error threshold;
/// truncated moments of such a state cannot be trusted.
class LeakageError : public Error {
 public:
  LeakageError(const std::string& what, double leakage)
      : Error(what), leakage_(leakage) {}
  double leakage() const noexcept { return leakage_; }

 private:
  double leakage_;
};

/// A dense computation was requested above its configured dimension cap.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Non-convergence or a broken numerical invariant.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fockwit
