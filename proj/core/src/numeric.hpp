// Internal floating-point helpers backed by Eigen. Not installed.
#ifndef TABALG_SRC_NUMERIC_HPP
#define TABALG_SRC_NUMERIC_HPP

#include <Eigen/Dense>

#include <random>
#include <span>
#include <vector>

#include "tabalg/matrix.hpp"

namespace tabalg::detail {

Eigen::MatrixXcd to_eigen(const Matrix& m);

struct EigenCluster {
  Complex center;
  std::vector<Eigen::Index> members;
};

/// Groups eigenvalues lying within tol * (1 + max |value|) of each other.
std::vector<EigenCluster> cluster_values(const Eigen::VectorXcd& values, double tol);

struct JointEigenvectors {
  /// Random integer weights r_b of the combination sum_b r_b F_b that was
  /// diagonalized last.
  std::vector<long> weights;
  /// Row vectors v with v F_b = chi_b v for every member F_b.
  std::vector<Eigen::VectorXcd> vectors;
};

/// Simultaneous left eigenvectors of a commuting diagonalizable family.
/// Uses a random combination, refines degenerate clusters with a second
/// combination, and retries with fresh weights up to `retries` times before
/// throwing NumericalDegeneracy.
JointEigenvectors joint_left_eigenvectors(std::span<const Eigen::MatrixXcd> family,
                                          std::mt19937_64& rng, double cluster_tol,
                                          int retries = 3);

}  // namespace tabalg::detail

#endif  // TABALG_SRC_NUMERIC_HPP
