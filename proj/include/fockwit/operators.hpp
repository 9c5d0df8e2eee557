#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "fockwit/fock_space.hpp"

namespace fockwit {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Sparse operator on a truncated Fock space. Matrix elements are the exact
/// projections of the infinite-dimensional operator onto the truncated basis.
class LinearOperator {
 public:
  LinearOperator(FockSpace space, SparseMatrix matrix);

  static LinearOperator from_dense(FockSpace space, const Eigen::MatrixXcd& dense);

  const FockSpace& space() const noexcept { return space_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

 private:
  FockSpace space_;
  SparseMatrix matrix_;
};

LinearOperator identity_op(const FockSpace& space);
LinearOperator zero_op(const FockSpace& space);

/// a_m: <..,n-1,..|a|..,n,..> = sqrt(n) on the selected mode.
LinearOperator annihilation_op(const FockSpace& space, std::size_t mode);
LinearOperator creation_op(const FockSpace& space, std::size_t mode);
/// Diagonal occupation number of `mode`; stored exactly (integer diagonal).
LinearOperator number_op(const FockSpace& space, std::size_t mode);

struct Quadratures {
  LinearOperator x;  // (a + a^dag) / sqrt(2)
  LinearOperator p;  // (a - a^dag) / (i sqrt(2))
};
Quadratures quadrature_ops(const FockSpace& space, std::size_t mode);

LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator adjoint(const LinearOperator& a);
LinearOperator linear_combine(std::span<const Complex> coeffs,
                              std::span<const LinearOperator> ops);

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(Complex c, const LinearOperator& a);
/// Operator product, same as compose(a, b).
LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);

/// Transposes the index block of `mode` only:
/// O[(i_m..),(j_m..)] -> position [(j_m..),(i_m..)] with other modes fixed.
LinearOperator partial_transpose_op(const LinearOperator& op, std::size_t mode);

bool is_hermitian(const LinearOperator& op, double tol);

/// Largest entrywise |a - b|.
double max_abs_diff(const LinearOperator& a, const LinearOperator& b);

}  // namespace fockwit
