#include "fixtures.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace fixtures {

using tabalg::TableBuilder;

std::string data_path(const std::string& name) { return std::string(TABALG_DATA_DIR) + "/" + name; }

StructureConstantTable integral_nonstandard() {
  TableBuilder b(3);
  b.identity_products().label(1, "b").label(2, "c").degree(1, 2).degree(2, 25);
  b.set(1, 1, 0, 2).set(1, 1, 1, 1);
  b.set(2, 2, 0, 25).set(2, 2, 1, 25).set(2, 2, 2, 22);
  b.set(1, 2, 2, 2).set(2, 1, 2, 2);
  return b.build();
}

StructureConstantTable rank_one() { return TableBuilder(1).identity_products().build(); }

StructureConstantTable involution() {
  TableBuilder b(2);
  b.identity_products().label(1, "g").set(1, 1, 0, 1);
  return b.build();
}

StructureConstantTable cyclic_group(std::size_t n) {
  TableBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, (i + j) % n, 1);
    if (i != 0 && (n - i) % n > i) b.star(i, n - i);
  }
  return b.build();
}

namespace {

using Perm = std::array<int, 3>;

std::vector<Perm> s3_elements() {
  std::vector<Perm> out;
  Perm p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& a, const Perm& b) {  // (a b)(i) = a(b(i))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

Perm inverse(const Perm& a) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[a[i]] = i;
  return r;
}

std::size_t find(const std::vector<Perm>& v, const Perm& p) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), p) - v.begin());
}

}  // namespace

StructureConstantTable symmetric_group_s3() {
  auto el = s3_elements();
  TableBuilder b(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) b.set(i, j, find(el, compose(el[i], el[j])), 1);
    std::size_t inv = find(el, inverse(el[i]));
    if (inv > i) b.star(i, inv);
  }
  return b.build();
}

SchemeRelations petersen() {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pts.push_back({a, b});
  SchemeRelations s;
  s.n = pts.size();
  for (auto [a, b] : pts) {
    std::vector<std::size_t> row;
    for (auto [c, d] : pts) {
      if (a == c && b == d) row.push_back(0);
      else if (a == c || a == d || b == c || b == d) row.push_back(2);
      else row.push_back(1);
    }
    s.relmat.push_back(row);
  }
  return s;
}

SchemeRelations pentagon() {
  SchemeRelations s;
  s.n = 5;
  for (std::size_t x = 0; x < 5; ++x) {
    std::vector<std::size_t> row;
    for (std::size_t y = 0; y < 5; ++y) {
      std::size_t d = (y + 5 - x) % 5;
      row.push_back(std::min(d, 5 - d) % 5);
    }
    s.relmat.push_back(row);
  }
  return s;
}

SchemeRelations complete_graph(std::size_t n) {
  SchemeRelations s;
  s.n = n;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> row(n, 1);
    row[x] = 0;
    s.relmat.push_back(row);
  }
  return s;
}

SchemeRelations s3_thin() {
  auto el = s3_elements();
  SchemeRelations s;
  s.n = el.size();
  for (const auto& x : el) {
    std::vector<std::size_t> row;
    for (const auto& y : el) row.push_back(find(el, compose(inverse(x), y)));
    s.relmat.push_back(row);
  }
  return s;
}

std::vector<std::vector<std::vector<long>>> brute_force_intersections(const SchemeRelations& s) {
  std::size_t r = 0;
  for (const auto& row : s.relmat)
    for (auto g : row) r = std::max(r, g + 1);
  std::vector<std::vector<std::vector<long>>> p(
      r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    bool found = false;
    for (std::size_t x = 0; x < s.n && !found; ++x) {
      for (std::size_t y = 0; y < s.n && !found; ++y) {
        if (s.relmat[x][y] != k) continue;
        found = true;
        for (std::size_t z = 0; z < s.n; ++z) ++p[s.relmat[x][z]][s.relmat[z][y]][k];
      }
    }
  }
  return p;
}

std::vector<std::pair<double, int>> adjacency_spectrum(const SchemeRelations& s, std::size_t g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s.n, s.n);
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y)
      if (s.relmat[x][y] == g) a(x, y) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::map<long, int> counts;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    ++counts[std::lround(solver.eigenvalues()[i] * 1e6)];
  std::vector<std::pair<double, int>> out;
  for (auto [v, c] : counts) out.push_back({static_cast<double>(v) / 1e6, c});
  return out;
}

std::pair<double, double> srg_multiplicities(long n, long k, long lambda, long mu) {
  double disc = std::sqrt(double((lambda - mu) * (lambda - mu) + 4 * (k - mu)));
  double shift = (2.0 * k + (n - 1.0) * (lambda - mu)) / disc;
  return {0.5 * ((n - 1.0) - shift), 0.5 * ((n - 1.0) + shift)};
}

std::vector<std::pair<std::string, StructureConstantTable>> commutative_zoo() {
  return {
      {"integral_nonstandard", integral_nonstandard()},
      {"affine_q3", tabalg::scheme::affine_plane_algebra(3)},
      {"affine_q4", tabalg::scheme::affine_plane_algebra(4)},
      {"petersen", tabalg::scheme::scheme_to_algebra(petersen()).table},
      {"pentagon", tabalg::scheme::scheme_to_algebra(pentagon()).table},
      {"cyclic_3", cyclic_group(3)},
      {"involution", involution()},
  };
}

}  // namespace fixtures
