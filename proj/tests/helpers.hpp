#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fockwit/fock_space.hpp"
#include "fockwit/operators.hpp"
#include "fockwit/states.hpp"

namespace fockwit::test {

inline FockSpace space2(int na, int nb) { return make_space(2, {na, nb}); }

inline Eigen::MatrixXcd random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = {g(rng), g(rng)};
  }
  return m;
}

inline Eigen::MatrixXcd random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const Eigen::MatrixXcd m = random_matrix(n, rng);
  return (m + m.adjoint()) / 2.0;
}

/// G G^dag / Tr, a full-rank random density matrix.
inline DensityOperator random_density(const FockSpace& space, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = random_matrix(space.dim(), rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityOperator::from_matrix(space, rho);
}

inline StateVector basis(const FockSpace& space, std::vector<int> occ) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  v(static_cast<Eigen::Index>(space.index(occ))) = 1.0;
  return StateVector(space, v);
}

}  // namespace fockwit::test
