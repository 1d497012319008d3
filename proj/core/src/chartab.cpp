#include "tabalg/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "numeric.hpp"
#include "tabalg/errors.hpp"

namespace tabalg {
namespace chartab {

namespace {

// Eigenvalues closer than this (relative) are treated as one cluster.
constexpr double kClusterTolerance = 1e-7;
// Relative size below which an imaginary part is treated as roundoff.
constexpr double kImagRoundoff = 1e-10;

struct Row {
  std::vector<Scalar> values;
  Scalar degree = 1;
  Scalar zeta;
  AlgebraElement idempotent;
};

Scalar clean(Complex z, double scale) {
  if (std::fabs(z.imag()) <= kImagRoundoff * scale) z = {z.real(), 0.0};
  return Scalar(z);
}

bool all_exact(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_exact(); });
}

std::optional<Scalar> rationalize_scalar(const Scalar& s, double tol) {
  if (s.is_exact()) return s;
  if (!s.is_real(tol)) return std::nullopt;
  auto q = rationalize(s.real(), tol);
  if (!q) return std::nullopt;
  return Scalar(*q);
}

std::optional<std::vector<Scalar>> rationalize_vector(const std::vector<Scalar>& v, double tol) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& s : v) {
    auto q = rationalize_scalar(s, tol);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

// chi(b) chi(c) = sum_e lambda(b,c,e) chi(e) for all b, c, checked exactly.
bool is_exact_linear_character(const StructureConstantTable& t, const std::vector<Scalar>& chi) {
  if (!(chi[0] == Scalar(1))) return false;
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    for (BasisIndex c = 0; c < t.rank(); ++c) {
      Scalar rhs = 0;
      for (const Term& term : t.product(b, c)) rhs += term.value * chi[term.index];
      if (!(chi[b] * chi[c] == rhs)) return false;
    }
  }
  return true;
}

// Lagrange idempotents in the commutative subalgebra generated by z:
// eps_i = prod_{j != i} (z - w_j) / (w_i - w_j).
std::vector<AlgebraElement> lagrange_idempotents(const StructureConstantTable& t,
                                                 const AlgebraElement& z,
                                                 const std::vector<Scalar>& w) {
  const std::size_t n = t.rank();
  std::vector<AlgebraElement> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    AlgebraElement e = AlgebraElement::unit(n);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j == i) continue;
      AlgebraElement factor = z - AlgebraElement::unit(n) * w[j];
      factor *= Scalar(1) / (w[i] - w[j]);
      e = multiply(t, e, factor);
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool separated(const std::vector<Scalar>& w, double tol) {
  double scale = 1.0;
  for (const auto& x : w) scale = std::max(scale, x.abs());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i].is_exact() && w[j].is_exact()) {
        if (w[i] == w[j]) return false;
      } else if ((w[i] - w[j]).abs() <= tol * scale) {
        return false;
      }
    }
  return true;
}

// Random integer combination z of the given elements whose values under
// `evaluate` are pairwise distinct.
template <typename Eval>
std::pair<AlgebraElement, std::vector<Scalar>> separating_element(
    std::size_t rank, const std::vector<AlgebraElement>& generators, std::size_t count,
    Eval evaluate, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 1000);
  for (int attempt = 0; attempt < 16; ++attempt) {
    AlgebraElement z(rank);
    for (const auto& g : generators) z += g * Scalar(dist(rng));
    std::vector<Scalar> w;
    w.reserve(count);
    for (std::size_t i = 0; i < count; ++i) w.push_back(evaluate(i, z));
    if (separated(w, kClusterTolerance)) return {std::move(z), std::move(w)};
  }
  throw NumericalDegeneracy("no random element separates the characters");
}

bool exact_idempotent_system(const StructureConstantTable& t,
                             const std::vector<AlgebraElement>& idems) {
  return std::all_of(idems.begin(), idems.end(),
                     [](const AlgebraElement& e) { return e.is_exact(); }) &&
         idempotent_axioms_hold(t, IdempotentSet{idems}, 0.0);
}

std::vector<Row> commutative_rows(const StructureConstantTable& t, const CharacterOptions& opts,
                                  std::mt19937_64& rng, std::vector<std::string>& warnings) {
  const std::size_t n = t.rank();
  std::vector<Eigen::MatrixXcd> family;
  for (const auto& m : regular_representation(t)) family.push_back(detail::to_eigen(m));
  auto joint = detail::joint_left_eigenvectors(family, rng, kClusterTolerance);
  if (joint.vectors.size() != n) {
    throw NumericalDegeneracy("found " + std::to_string(joint.vectors.size()) +
                              " joint eigenvectors for rank " + std::to_string(n));
  }
  double scale = 1.0;
  for (const auto& d : t.degrees()) scale = std::max(scale, d.abs());

  std::vector<Row> rows;
  for (const auto& v : joint.vectors) {
    if (std::abs(v[0]) < 1e-12) throw NumericalDegeneracy("eigenvector vanishes at 1_A");
    Row row;
    for (BasisIndex b = 0; b < n; ++b) row.values.push_back(clean(v[b] / v[0], scale));
    row.values[0] = 1;
    rows.push_back(std::move(row));
  }

  if (t.is_exact()) {
    std::vector<std::vector<Scalar>> exact_rows;
    for (const auto& row : rows) {
      auto q = rationalize_vector(row.values, 1e-9);
      if (!q || !is_exact_linear_character(t, *q)) break;
      exact_rows.push_back(std::move(*q));
    }
    bool distinct = exact_rows.size() == rows.size();
    for (std::size_t i = 0; distinct && i < exact_rows.size(); ++i)
      for (std::size_t j = i + 1; distinct && j < exact_rows.size(); ++j)
        distinct = exact_rows[i] != exact_rows[j];
    if (distinct) {
      for (std::size_t i = 0; i < rows.size(); ++i) rows[i].values = exact_rows[i];
    } else {
      warnings.push_back("character values are not all rational; using floating values");
    }
  }
  (void)opts;
  return rows;
}

std::vector<Row> noncommutative_rows(const StructureConstantTable& t, const CharacterOptions& opts,
                                     std::mt19937_64& rng, std::vector<std::string>& warnings) {
  const std::size_t n = t.rank();
  auto center = center_basis(t, opts.tolerance);
  const std::size_t m = center.size();

  // Central character values of a generic central element are the distinct
  // eigenvalues of its left-regular matrix.
  std::uniform_int_distribution<long> dist(1, 1000);
  AlgebraElement z;
  std::vector<Scalar> w;
  for (int attempt = 0; attempt < 4 && w.size() != m; ++attempt) {
    z = AlgebraElement(n);
    for (const auto& c : center) z += c * Scalar(dist(rng));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(left_matrix(t, z)), false);
    auto clusters = detail::cluster_values(solver.eigenvalues(), kClusterTolerance);
    w.clear();
    if (clusters.size() != m) continue;
    double scale = 1.0;
    for (const auto& c : clusters) scale = std::max(scale, std::abs(c.center));
    for (const auto& c : clusters) w.push_back(clean(c.center, scale));
  }
  if (w.size() != m) {
    throw NumericalDegeneracy("central element does not separate the " + std::to_string(m) +
                              " blocks of the center");
  }
  auto idems = lagrange_idempotents(t, z, w);

  if (t.is_exact()) {
    std::vector<AlgebraElement> exact;
    for (const auto& e : idems) {
      auto q = rationalize_vector(e.coeffs, 1e-9);
      if (!q) break;
      exact.emplace_back(std::move(*q));
    }
    if (exact.size() == idems.size() && exact_idempotent_system(t, exact)) {
      idems = std::move(exact);
    } else {
      warnings.push_back("central idempotents are not rational; using floating values");
    }
  }

  const Scalar b_plus = t.b_plus();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Row row;
    row.idempotent = idems[i];
    Scalar dim_sq = regular_trace(t, idems[i]);
    Scalar d;
    if (dim_sq.is_exact() && mpz_perfect_square_p(dim_sq.rational().get_num_mpz_t()) &&
        mpz_perfect_square_p(dim_sq.rational().get_den_mpz_t())) {
      mpz_class num = sqrt(mpz_class(dim_sq.rational().get_num()));
      mpz_class den = sqrt(mpz_class(dim_sq.rational().get_den()));
      d = Scalar(Rational(num, den));
    } else {
      double root = std::sqrt(std::max(0.0, dim_sq.real()));
      if (std::fabs(root - std::round(root)) < 1e-6) {
        d = Scalar(std::round(root));
      } else {
        d = Scalar(root);
        warnings.push_back("character degree " + d.str() + " is not an integer");
      }
    }
    row.degree = d;
    for (BasisIndex b = 0; b < n; ++b) {
      AlgebraElement be = multiply(t, AlgebraElement::basis(n, b), idems[i]);
      row.values.push_back(regular_trace(t, be) / d);
    }
    row.zeta = b_plus * idems[i][0] / d;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<AlgebraElement> center_basis(const StructureConstantTable& t, double tol) {
  const std::size_t n = t.rank();
  // x = sum_a x_a a is central iff sum_a x_a (lambda(a,b,c) - lambda(b,a,c)) = 0
  Matrix commutator(n * n, n);
  for (BasisIndex a = 0; a < n; ++a)
    for (BasisIndex b = 0; b < n; ++b)
      for (BasisIndex c = 0; c < n; ++c)
        commutator(b * n + c, a) = t.lambda(a, b, c) - t.lambda(b, a, c);
  std::vector<AlgebraElement> out;
  for (auto& v : nullspace(commutator, tol)) out.emplace_back(std::move(v));
  return out;
}

std::vector<Scalar> standard_trace(const StructureConstantTable& t) {
  std::vector<Scalar> z(t.rank(), Scalar(0));
  z[0] = t.b_plus();
  return z;
}

CharacterData character_table(const StructureConstantTable& t, const CharacterOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  CharacterData out;
  CharacterTable& ct = out.table;
  const std::size_t n = t.rank();
  ct.b_plus = t.b_plus();
  ct.commutative = is_commutative(t, opts.tolerance);

  std::vector<Row> rows = ct.commutative ? commutative_rows(t, opts, rng, ct.warnings)
                                         : noncommutative_rows(t, opts, rng, ct.warnings);

  // principal character first, the rest in descending lexicographic order
  double scale = 1.0;
  for (const auto& d : t.degrees()) scale = std::max(scale, d.abs());
  const double order_tol = 1e-7 * scale;
  auto is_principal = [&](const Row& r) {
    for (BasisIndex b = 0; b < n; ++b)
      if (!near(r.values[b], t.degree(b), order_tol)) return false;
    return true;
  };
  auto principal = std::find_if(rows.begin(), rows.end(), is_principal);
  if (principal == rows.end()) {
    throw IntegrityError("principal character not found; is the table a valid C-algebra?");
  }
  std::iter_swap(rows.begin(), principal);
  std::sort(rows.begin() + 1, rows.end(), [&](const Row& a, const Row& b) {
    for (BasisIndex i = 0; i < n; ++i) {
      int c = compare(a.values[i], b.values[i], order_tol);
      if (c != 0) return c > 0;
    }
    return false;
  });

  if (ct.commutative) {
    // zeta solves sum_chi zeta_chi chi(b) = delta(b,1) |B+|
    Matrix system(n, n);
    for (std::size_t chi = 0; chi < n; ++chi)
      for (BasisIndex b = 0; b < n; ++b) system(b, chi) = rows[chi].values[b];
    auto zeta = solve(system, standard_trace(t), opts.tolerance);
    if (!zeta) throw NumericalDegeneracy("character matrix is singular");
    for (std::size_t chi = 0; chi < n; ++chi) rows[chi].zeta = (*zeta)[chi];

    std::vector<AlgebraElement> basis;
    for (BasisIndex b = 0; b < n; ++b) basis.push_back(AlgebraElement::basis(n, b));
    auto [z, w] = separating_element(
        n, basis, n,
        [&](std::size_t chi, const AlgebraElement& x) {
          Scalar s = 0;
          for (BasisIndex b = 0; b < n; ++b) s += x[b] * rows[chi].values[b];
          return s;
        },
        rng);
    auto idems = lagrange_idempotents(t, z, w);
    for (std::size_t chi = 0; chi < n; ++chi) rows[chi].idempotent = std::move(idems[chi]);
  }

  ct.exact = true;
  for (auto& row : rows) {
    ct.values.push_back(row.values);
    ct.degrees.push_back(row.degree);
    ct.zeta.push_back(row.zeta);
    out.idempotents.idempotents.push_back(row.idempotent);
    ct.exact = ct.exact && all_exact(row.values) && row.degree.is_exact() &&
               row.zeta.is_exact() && row.idempotent.is_exact();
  }
  ct.principal_row = 0;
  if (opts.require_exact && !ct.exact) {
    throw ExactnessError("character table is not rational");
  }
  return out;
}

StandardVerdict check_standard_condition(const CharacterTable& ct, double tolerance) {
  StandardVerdict v;
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    const Scalar& z = ct.zeta[chi];
    bool ok = z.is_integer(tolerance) && z.is_positive(tolerance);
    if (!ok) v.offending.emplace_back(chi, z);
  }
  v.in_standard_class = v.offending.empty();
  return v;
}

double OrthogonalityResiduals::max_abs() const {
  double m = tabalg::max_abs(rows);
  if (has_columns) m = std::max(m, tabalg::max_abs(columns));
  return m;
}

bool OrthogonalityResiduals::vanishes(double tol) const {
  auto zero = [tol](const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero(tol)) return false;
    return true;
  };
  return zero(rows) && (!has_columns || zero(columns));
}

OrthogonalityResiduals orthogonality_residual(const CharacterTable& ct,
                                              const StructureConstantTable& t) {
  const std::size_t k = ct.size();
  const std::size_t n = t.rank();
  OrthogonalityResiduals r;
  r.rows = Matrix(k, k);
  for (std::size_t phi = 0; phi < k; ++phi) {
    for (std::size_t psi = 0; psi < k; ++psi) {
      Scalar sum = 0;
      for (BasisIndex b = 0; b < n; ++b) {
        BasisIndex bs = t.star(b);
        sum += ct.values[phi][bs] * ct.values[psi][b] / t.degree(bs);
      }
      sum /= ct.b_plus;
      if (phi == psi) sum -= ct.degrees[phi] / ct.zeta[phi];
      r.rows(phi, psi) = sum;
    }
  }
  if (ct.commutative) {
    r.has_columns = true;
    r.columns = Matrix(n, n);
    for (BasisIndex b = 0; b < n; ++b) {
      for (BasisIndex c = 0; c < n; ++c) {
        Scalar sum = 0;
        for (std::size_t chi = 0; chi < k; ++chi)
          sum += ct.zeta[chi] * ct.values[chi][b] * ct.values[chi][t.star(c)];
        if (b == c) sum -= t.degree(b) * ct.b_plus;
        r.columns(b, c) = sum;
      }
    }
  }
  return r;
}

bool multiplicity_bound_check(const CharacterTable& ct, double tol) {
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    const Scalar& z = ct.zeta[chi];
    const Scalar& d = ct.degrees[chi];
    if (z.is_exact() && d.is_exact()) {
      Rational lhs = abs(z.rational()) * d.rational();
      if (lhs < 1) return false;
      if (ct.commutative && abs(z.rational()) < 1) return false;
    } else {
      if (z.abs() * d.abs() < 1.0 - tol) return false;
      if (ct.commutative && z.abs() < 1.0 - tol) return false;
    }
  }
  return true;
}

bool character_value_bound_check(const CharacterTable& ct, const StructureConstantTable& t,
                                 double tol) {
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    for (BasisIndex a = 0; a < t.rank(); ++a) {
      const Scalar& v = ct.values[chi][a];
      Scalar bound = t.degree(a) * ct.degrees[chi];
      if (v.is_exact() && bound.is_exact()) {
        if (abs(v.rational()) > bound.rational()) return false;
      } else if (v.abs() > bound.abs() + tol) {
        return false;
      }
    }
  }
  return true;
}

bool reconstructs_standard_trace(const CharacterTable& ct, const StructureConstantTable& t,
                                 double tol) {
  auto zeta = standard_trace(t);
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    Scalar sum = 0;
    for (std::size_t chi = 0; chi < ct.size(); ++chi)
      sum += ct.zeta[chi] * ct.values[chi][b];
    if (!near(sum, zeta[b], tol)) return false;
  }
  return true;
}

bool idempotent_axioms_hold(const StructureConstantTable& t, const IdempotentSet& idems,
                            double tol) {
  const std::size_t n = t.rank();
  const auto& e = idems.idempotents;
  AlgebraElement total(n);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].size() != n || e[i].is_zero(tol)) return false;
    total += e[i];
    for (std::size_t j = 0; j < e.size(); ++j) {
      AlgebraElement prod = multiply(t, e[i], e[j]);
      if (i == j ? !near(prod, e[i], tol) : !prod.is_zero(tol)) return false;
    }
    for (BasisIndex b = 0; b < n; ++b) {
      AlgebraElement basis = AlgebraElement::basis(n, b);
      if (!near(multiply(t, basis, e[i]), multiply(t, e[i], basis), tol)) return false;
    }
  }
  return near(total, AlgebraElement::unit(n), tol);
}

AlgebraElement idempotent_from_character(const CharacterTable& ct, std::size_t row,
                                         const StructureConstantTable& t) {
  AlgebraElement e(t.rank());
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    BasisIndex bs = t.star(b);
    e[b] = ct.zeta[row] * ct.values[row][bs] / t.degree(bs) / ct.b_plus;
  }
  return e;
}

BasisMap BasisMap::permutation(std::vector<BasisIndex> image) {
  BasisMap m;
  m.scale.assign(image.size(), Scalar(1));
  m.image = std::move(image);
  return m;
}

bool isomorphism_check(const StructureConstantTable& t1, const StructureConstantTable& t2,
                       const BasisMap& map, double tol) {
  const std::size_t n = t1.rank();
  if (t2.rank() != n || map.image.size() != n || map.scale.size() != n) {
    throw StructuralError("basis map does not match the algebra ranks");
  }
  std::vector<bool> hit(n, false);
  for (BasisIndex i : map.image) {
    if (i >= n || hit[i]) throw StructuralError("basis map is not a bijection");
    hit[i] = true;
  }
  for (const auto& s : map.scale)
    if (s.is_zero(tol)) throw StructuralError("basis map has a zero scale");

  // f(B) = B'
  for (const auto& s : map.scale)
    if (!near(s, Scalar(1), tol)) return false;
  // f(b*) = f(b)*
  for (BasisIndex b = 0; b < n; ++b) {
    if (map.image[t1.star(b)] != t2.star(map.image[b])) return false;
    if (!near(map.scale[t1.star(b)], map.scale[b].conj(), tol)) return false;
  }
  // f(a) f(b) = f(ab):  s_a s_b lambda'(fa, fb, fc) = s_c lambda(a, b, c)
  for (BasisIndex a = 0; a < n; ++a)
    for (BasisIndex b = 0; b < n; ++b)
      for (BasisIndex c = 0; c < n; ++c) {
        Scalar lhs = map.scale[a] * map.scale[b] *
                     t2.lambda(map.image[a], map.image[b], map.image[c]);
        Scalar rhs = map.scale[c] * t1.lambda(a, b, c);
        if (!near(lhs, rhs, tol)) return false;
      }
  return true;
}

std::vector<Scalar> sorted_zeta(const CharacterTable& ct, double tol) {
  std::vector<Scalar> z = ct.zeta;
  std::sort(z.begin(), z.end(),
            [tol](const Scalar& a, const Scalar& b) { return compare(a, b, tol) < 0; });
  return z;
}

bool multiset_zeta_equal(const CharacterTable& a, const CharacterTable& b, double tol) {
  if (a.size() != b.size()) return false;
  auto za = sorted_zeta(a, tol), zb = sorted_zeta(b, tol);
  for (std::size_t i = 0; i < za.size(); ++i)
    if (!near(za[i], zb[i], tol)) return false;
  return true;
}

}  // namespace chartab
}  // namespace tabalg
