#include "fockwit/operators.hpp"

#include <cmath>
#include <vector>

#include "fockwit/error.hpp"

namespace fockwit {

namespace {

using Triplet = Eigen::Triplet<Complex>;

LinearOperator from_triplets(const FockSpace& space, const std::vector<Triplet>& t) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  SparseMatrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return LinearOperator(space, std::move(m));
}

}  // namespace

LinearOperator::LinearOperator(FockSpace space, SparseMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(space_.dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw InvalidArgument("operator matrix shape does not match space dimension");
  }
  matrix_.makeCompressed();
}

LinearOperator LinearOperator::from_dense(FockSpace space, const Eigen::MatrixXcd& dense) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  if (dense.rows() != n || dense.cols() != n) {
    throw InvalidArgument("dense matrix shape does not match space dimension");
  }
  SparseMatrix m = dense.sparseView(Complex(0.0), 0.0);
  return LinearOperator(std::move(space), std::move(m));
}

Eigen::VectorXcd LinearOperator::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != matrix_.cols()) {
    throw InvalidArgument("vector length does not match operator dimension");
  }
  return matrix_ * v;
}

LinearOperator identity_op(const FockSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  SparseMatrix m(n, n);
  m.setIdentity();
  return LinearOperator(space, std::move(m));
}

LinearOperator zero_op(const FockSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  return LinearOperator(space, SparseMatrix(n, n));
}

LinearOperator annihilation_op(const FockSpace& space, std::size_t mode) {
  space.check_mode(mode);
  const std::size_t stride = space.stride(mode);
  std::vector<Triplet> t;
  t.reserve(space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    const int n = space.occupation(j, mode);
    if (n > 0) {
      t.emplace_back(static_cast<int>(j - stride), static_cast<int>(j),
                     Complex(std::sqrt(static_cast<double>(n)), 0.0));
    }
  }
  return from_triplets(space, t);
}

LinearOperator creation_op(const FockSpace& space, std::size_t mode) {
  return adjoint(annihilation_op(space, mode));
}

LinearOperator number_op(const FockSpace& space, std::size_t mode) {
  space.check_mode(mode);
  std::vector<Triplet> t;
  t.reserve(space.dim());
  for (std::size_t j = 0; j < space.dim(); ++j) {
    const int n = space.occupation(j, mode);
    if (n > 0) {
      t.emplace_back(static_cast<int>(j), static_cast<int>(j),
                     Complex(static_cast<double>(n), 0.0));
    }
  }
  return from_triplets(space, t);
}

Quadratures quadrature_ops(const FockSpace& space, std::size_t mode) {
  const LinearOperator a = annihilation_op(space, mode);
  const LinearOperator ad = adjoint(a);
  const double s = 1.0 / std::sqrt(2.0);
  return Quadratures{Complex(s, 0.0) * (a + ad), Complex(0.0, -s) * (a - ad)};
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a.space(), b.space());
  SparseMatrix m = (a.matrix() * b.matrix()).pruned();
  return LinearOperator(a.space(), std::move(m));
}

LinearOperator adjoint(const LinearOperator& a) {
  SparseMatrix m = a.matrix().adjoint();
  return LinearOperator(a.space(), std::move(m));
}

LinearOperator linear_combine(std::span<const Complex> coeffs,
                              std::span<const LinearOperator> ops) {
  if (coeffs.size() != ops.size() || ops.empty()) {
    throw InvalidArgument("linear_combine needs one coefficient per operator");
  }
  SparseMatrix m = coeffs[0] * ops[0].matrix();
  for (std::size_t k = 1; k < ops.size(); ++k) {
    require_same_space(ops[0].space(), ops[k].space());
    m += coeffs[k] * ops[k].matrix();
  }
  return LinearOperator(ops[0].space(), std::move(m));
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a.space(), b.space());
  SparseMatrix m = a.matrix() + b.matrix();
  return LinearOperator(a.space(), std::move(m));
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a.space(), b.space());
  SparseMatrix m = a.matrix() - b.matrix();
  return LinearOperator(a.space(), std::move(m));
}

LinearOperator operator*(Complex c, const LinearOperator& a) {
  SparseMatrix m = c * a.matrix();
  return LinearOperator(a.space(), std::move(m));
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  return compose(a, b);
}

LinearOperator partial_transpose_op(const LinearOperator& op, std::size_t mode) {
  const FockSpace& space = op.space();
  space.check_mode(mode);
  const auto stride = static_cast<long long>(space.stride(mode));
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(op.matrix().nonZeros()));
  for (Eigen::Index k = 0; k < op.matrix().outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(op.matrix(), k); it; ++it) {
      const auto i = static_cast<std::size_t>(it.row());
      const auto j = static_cast<std::size_t>(it.col());
      const long long shift =
          static_cast<long long>(space.occupation(j, mode) - space.occupation(i, mode)) *
          stride;
      t.emplace_back(static_cast<int>(static_cast<long long>(i) + shift),
                     static_cast<int>(static_cast<long long>(j) - shift), it.value());
    }
  }
  return from_triplets(space, t);
}

bool is_hermitian(const LinearOperator& op, double tol) {
  SparseMatrix diff = op.matrix() - SparseMatrix(op.matrix().adjoint());
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      if (std::abs(it.value()) > tol) return false;
    }
  }
  return true;
}

double max_abs_diff(const LinearOperator& a, const LinearOperator& b) {
  require_same_space(a.space(), b.space());
  SparseMatrix diff = a.matrix() - b.matrix();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

}  // namespace fockwit
