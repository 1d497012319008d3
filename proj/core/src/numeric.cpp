#include "numeric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

#include "tabalg/errors.hpp"

namespace tabalg::detail {

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).complex();
  return out;
}

std::vector<EigenCluster> cluster_values(const Eigen::VectorXcd& values, double tol) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) scale = std::max(scale, 1.0 + std::abs(values[i]));
  const double radius = tol * scale;
  std::vector<EigenCluster> clusters;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const EigenCluster& c) {
      return std::abs(c.center - values[i]) <= radius;
    });
    if (it == clusters.end()) {
      clusters.push_back({values[i], {i}});
    } else {
      it->members.push_back(i);
      Complex sum = 0;
      for (auto m : it->members) sum += values[m];
      it->center = sum / static_cast<double>(it->members.size());
    }
  }
  return clusters;
}

namespace {

Eigen::MatrixXcd combination(std::span<const Eigen::MatrixXcd> family, std::mt19937_64& rng,
                             std::vector<long>& weights) {
  std::uniform_int_distribution<long> dist(1, 1000);
  const auto n = family.front().rows();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  weights.clear();
  for (const auto& f : family) {
    long w = dist(rng);
    weights.push_back(w);
    m += static_cast<double>(w) * f;
  }
  return m;
}

std::string describe(const EigenCluster& c) {
  std::ostringstream os;
  os << "eigenvalue cluster near (" << c.center.real() << "," << c.center.imag() << ") of size "
     << c.members.size();
  return os.str();
}

}  // namespace

JointEigenvectors joint_left_eigenvectors(std::span<const Eigen::MatrixXcd> family,
                                          std::mt19937_64& rng, double cluster_tol,
                                          int retries) {
  if (family.empty()) throw StructuralError("empty matrix family");
  std::string last_failure;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    JointEigenvectors out;
    Eigen::MatrixXcd m = combination(family, rng, out.weights);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.transpose());
    if (solver.info() != Eigen::Success) {
      last_failure = "eigen solver did not converge";
      continue;
    }
    auto clusters = cluster_values(solver.eigenvalues(), cluster_tol);
    bool failed = false;
    for (const auto& cluster : clusters) {
      if (cluster.members.size() == 1) {
        out.vectors.push_back(solver.eigenvectors().col(cluster.members.front()));
        continue;
      }
      // Degenerate: restrict a second combination to the cluster's span.
      const auto k = static_cast<Eigen::Index>(cluster.members.size());
      Eigen::MatrixXcd span(m.rows(), k);
      for (Eigen::Index j = 0; j < k; ++j) span.col(j) = solver.eigenvectors().col(cluster.members[j]);
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(span);
      Eigen::MatrixXcd basis = qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), k);
      std::vector<long> second_weights;
      Eigen::MatrixXcd m2 = combination(family, rng, second_weights);
      Eigen::MatrixXcd restricted = basis.adjoint() * m2.transpose() * basis;
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> sub(restricted);
      auto sub_clusters = cluster_values(sub.eigenvalues(), cluster_tol);
      if (sub.info() != Eigen::Success ||
          sub_clusters.size() != static_cast<std::size_t>(k)) {
        failed = true;
        last_failure = describe(cluster);
        break;
      }
      for (Eigen::Index j = 0; j < k; ++j) out.vectors.push_back(basis * sub.eigenvectors().col(j));
    }
    if (!failed) return out;
  }
  throw NumericalDegeneracy("could not separate characters: " + last_failure);
}

}  // namespace tabalg::detail
