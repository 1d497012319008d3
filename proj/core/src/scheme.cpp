#include "tabalg/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "tabalg/errors.hpp"

namespace tabalg {

std::size_t SchemeRelations::rank() const {
  std::size_t r = 0;
  for (const auto& row : relmat)
    for (std::size_t g : row) r = std::max(r, g + 1);
  return r;
}

namespace scheme {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  return tokens;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  }
  try {
    return std::stoul(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "value '" + tok + "' out of range");
  }
}

SchemeCheck failure(std::string reason, std::vector<std::size_t> witness) {
  return {false, std::move(reason), std::move(witness)};
}

bool near_value(const Scalar& v, long target, double tol) { return near(v, Scalar(target), tol); }

void check_shape(const StructureConstantTable& t, const MatrixRepresentation& d) {
  if (d.matrices.size() != t.rank()) {
    throw StructuralError("representation has " + std::to_string(d.matrices.size()) +
                          " matrices for rank " + std::to_string(t.rank()));
  }
  for (const auto& m : d.matrices) {
    if (m.rows() != d.dim || m.cols() != d.dim) {
      throw StructuralError("representation matrix is not " + std::to_string(d.dim) + "x" +
                            std::to_string(d.dim));
    }
  }
}

bool affords_zeta(const StructureConstantTable& t, const MatrixRepresentation& d, double tol) {
  if (!near(d.matrices[0].trace(), t.b_plus(), tol)) return false;
  for (BasisIndex b = 1; b < t.rank(); ++b)
    if (!d.matrices[b].trace().is_zero(tol)) return false;
  return true;
}

}  // namespace

SchemeRelations read_scheme(std::istream& in) {
  SchemeRelations s;
  bool header = false;
  bool have_points = false;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2 || toks[0] != "scheme" || toks[1] != "1") {
        throw ParseError(lineno, "expected header 'scheme 1'");
      }
      header = true;
      continue;
    }
    if (!have_points) {
      if (toks.size() != 2 || toks[0] != "points") {
        throw ParseError(lineno, "expected 'points <n>'");
      }
      s.n = parse_count(toks[1], lineno);
      if (s.n == 0) throw ParseError(lineno, "a scheme needs at least one point");
      have_points = true;
      continue;
    }
    if (s.relmat.size() == s.n) throw ParseError(lineno, "more than " + std::to_string(s.n) + " rows");
    if (toks.size() != s.n) {
      throw ParseError(lineno, "row has " + std::to_string(toks.size()) + " entries, expected " +
                                   std::to_string(s.n));
    }
    std::vector<std::size_t> row;
    for (const auto& tok : toks) row.push_back(parse_count(tok, lineno));
    s.relmat.push_back(std::move(row));
  }
  if (!header) throw ParseError(lineno, "empty input, expected 'scheme 1'");
  if (!have_points) throw ParseError(lineno, "missing 'points' line");
  if (s.relmat.size() != s.n) {
    throw ParseError(lineno, "expected " + std::to_string(s.n) + " rows, found " +
                                 std::to_string(s.relmat.size()));
  }
  return s;
}

SchemeRelations parse_scheme(const std::string& text) {
  std::istringstream in(text);
  return read_scheme(in);
}

std::string write_scheme(const SchemeRelations& s) {
  std::ostringstream os;
  os << "scheme 1\npoints " << s.n << '\n';
  for (const auto& row : s.relmat) {
    for (std::size_t y = 0; y < row.size(); ++y) os << (y ? " " : "") << row[y];
    os << '\n';
  }
  return os.str();
}

SchemeCheck check_scheme(const SchemeRelations& s, std::size_t point_guard) {
  const std::size_t n = s.n;
  if (n > point_guard) {
    throw DomainError(std::to_string(n) + " points exceed the guard of " +
                      std::to_string(point_guard));
  }
  if (n == 0 || s.relmat.size() != n) return failure("relation matrix is not n x n", {});
  for (std::size_t x = 0; x < n; ++x) {
    if (s.relmat[x].size() != n) return failure("relation matrix is not n x n", {x});
  }
  const std::size_t r = s.rank();
  if (r > n * n) return failure("relation indices are not contiguous", {});
  std::vector<bool> used(r, false);
  std::vector<std::size_t> star(r, r);
  std::vector<std::pair<std::size_t, std::size_t>> star_witness(r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t g = s.relmat[x][y];
      if ((x == y) != (g == 0)) {
        return failure(x == y ? "diagonal entry is not relation 0"
                              : "off-diagonal entry uses relation 0",
                       {x, y});
      }
      used[g] = true;
      std::size_t back = s.relmat[y][x];
      if (star[g] == r) {
        star[g] = back;
        star_witness[g] = {x, y};
      } else if (star[g] != back) {
        auto [x0, y0] = star_witness[g];
        return failure("relation " + std::to_string(g) + " has no well-defined transpose",
                       {x, y, x0, y0});
      }
    }
  }
  for (std::size_t g = 0; g < r; ++g)
    if (!used[g]) return failure("relation " + std::to_string(g) + " is empty", {});

  // counts[k] holds the (g, h) path counts of the first pair seen in relation k.
  std::vector<std::vector<std::size_t>> reference(r);
  std::vector<std::pair<std::size_t, std::size_t>> reference_pair(r);
  std::vector<std::size_t> counts(r * r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t z = 0; z < n; ++z) ++counts[s.relmat[x][z] * r + s.relmat[z][y]];
      std::size_t k = s.relmat[x][y];
      if (reference[k].empty()) {
        reference[k] = counts;
        reference_pair[k] = {x, y};
        continue;
      }
      if (counts != reference[k]) {
        std::size_t i = 0;
        while (counts[i] == reference[k][i]) ++i;
        auto [x0, y0] = reference_pair[k];
        return failure("intersection number for relations (" + std::to_string(i / r) + "," +
                           std::to_string(i % r) + ") over relation " + std::to_string(k) +
                           " differs between point pairs",
                       {x, y, x0, y0});
      }
    }
  }
  return {true, {}, {}};
}

SchemeAlgebra scheme_to_algebra(const SchemeRelations& s, std::size_t point_guard) {
  SchemeCheck check = check_scheme(s, point_guard);
  if (!check.ok) {
    std::string where;
    for (std::size_t i = 0; i < check.witness.size(); ++i)
      where += (i ? "," : "") + std::to_string(check.witness[i]);
    throw NotAScheme(check.reason + (where.empty() ? "" : " (points " + where + ")"));
  }
  const std::size_t n = s.n;
  const std::size_t r = s.rank();

  TableBuilder builder(r);
  std::vector<bool> seen(r, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t k = s.relmat[x][y];
      if (seen[k]) continue;
      seen[k] = true;
      for (std::size_t z = 0; z < n; ++z) builder.add(s.relmat[x][z], s.relmat[z][y], k, 1);
      std::size_t back = s.relmat[y][x];
      if (back != k) builder.star(k, back);
    }
  }
  std::vector<long> valency(r, 0);
  for (std::size_t y = 0; y < n; ++y) ++valency[s.relmat[0][y]];
  for (std::size_t g = 0; g < r; ++g) builder.degree(g, valency[g]);

  MatrixRepresentation rep{n, std::vector<Matrix>(r, Matrix(n, n))};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rep.matrices[s.relmat[x][y]](x, y) = 1;
  return {builder.build(), std::move(rep)};
}

bool is_homomorphism(const StructureConstantTable& t, const MatrixRepresentation& d, double tol) {
  check_shape(t, d);
  if (t.rank() == 0) return true;
  if (!near(d.matrices[0], Matrix::identity(d.dim), tol)) return false;
  for (BasisIndex a = 0; a < t.rank(); ++a) {
    for (BasisIndex b = 0; b < t.rank(); ++b) {
      Matrix expected(d.dim, d.dim);
      for (const Term& term : t.product(a, b)) expected += d.matrices[term.index] * term.value;
      if (!near(d.matrices[a] * d.matrices[b], expected, tol)) return false;
    }
  }
  return true;
}

AdjacencyVerdict verify_adjacency_image(const StructureConstantTable& t,
                                        const MatrixRepresentation& d, double tol) {
  if (!is_homomorphism(t, d, tol)) {
    throw StructuralError("matrices do not form a representation of the table algebra");
  }
  const std::size_t m = d.dim;
  const auto& D = d.matrices;
  AdjacencyVerdict v;
  v.affords_zeta = affords_zeta(t, d, tol);

  v.transpose_ok = true;
  for (BasisIndex b = 0; b < t.rank(); ++b)
    if (!near(D[t.star(b)], D[b].transpose(), tol)) v.transpose_ok = false;

  v.zero_one_ok = true;
  for (const auto& mat : D)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!near_value(mat(i, j), 0, tol) && !near_value(mat(i, j), 1, tol)) v.zero_one_ok = false;

  v.disjoint_ok = true;
  for (BasisIndex b = 0; b < t.rank(); ++b)
    for (BasisIndex c = b + 1; c < t.rank(); ++c)
      if (max_abs(D[b].hadamard(D[c])) > tol) v.disjoint_ok = false;

  Matrix sum(m, m);
  for (const auto& mat : D) sum += mat;
  v.sum_is_J = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!near_value(sum(i, j), 1, tol)) v.sum_is_J = false;

  v.row_sums_ok = true;
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    for (std::size_t i = 0; i < m; ++i) {
      Scalar row = 0, col = 0;
      for (std::size_t j = 0; j < m; ++j) {
        row += D[b](i, j);
        col += D[b](j, i);
      }
      if (!near(row, t.degree(b), tol) || !near(col, t.degree(b), tol)) v.row_sums_ok = false;
    }
  }
  v.is_adjacency_image = v.affords_zeta && v.transpose_ok && v.zero_one_ok && v.disjoint_ok &&
                         v.sum_is_J && v.row_sums_ok;
  return v;
}

HadamardReport hadamard_preservation_check(const StructureConstantTable& t,
                                           const MatrixRepresentation& d,
                                           const CharacterOptions& opts) {
  CharacterData data = chartab::character_table(t, opts);
  auto verdict = chartab::check_standard_condition(data.table);
  if (!verdict.in_standard_class) {
    throw NotInStandardClass("no representation affords the standard feasible trace: "
                             "multiplicity " + verdict.offending.front().second.str() +
                             " is not a positive integer");
  }
  check_shape(t, d);
  const double tol = opts.tolerance;
  if (!affords_zeta(t, d, tol)) {
    throw StructuralError("representation does not afford the standard feasible trace");
  }
  const auto& D = d.matrices;
  HadamardReport report;
  report.preserves = true;
  report.tau_identity_holds = true;
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    for (BasisIndex c = 0; c < t.rank(); ++c) {
      Matrix h = D[b].hadamard(D[c]);
      Matrix expected = b == c ? D[b] : Matrix(d.dim, d.dim);
      if (!near(h, expected, tol)) report.preserves = false;
      const Matrix& bs = D[t.star(b)];
      if (!near(bs.hadamard(D[c].transpose()).entry_sum(), (bs * D[c]).trace(), tol)) {
        report.tau_identity_holds = false;
      }
    }
  }
  return report;
}

bool faithfulness_check(const StructureConstantTable& t, const CharacterTable& ct, double tol) {
  if (!ct.commutative) throw Unsupported("faithfulness check needs a commutative algebra");
  const std::size_t d = ct.size();
  if (d != t.rank()) return false;
  Matrix m(d, d);
  for (std::size_t chi = 0; chi < d; ++chi)
    for (std::size_t b = 0; b < d; ++b) m(chi, b) = ct.zeta[chi] * ct.values[chi][b];
  return rank(m, tol) == d;
}

StructureConstantTable affine_plane_algebra(long q) {
  if (q < 2) throw DomainError("affine plane order must be at least 2, got " + std::to_string(q));
  const auto lines = static_cast<std::size_t>(q + 1);
  TableBuilder builder(lines + 1);
  builder.identity_products();
  for (std::size_t i = 1; i <= lines; ++i) {
    builder.label(i, "r" + std::to_string(i));
    builder.degree(i, q - 1);
    builder.set(i, i, 0, q - 1);
    builder.set(i, i, i, q - 2);
    for (std::size_t j = 1; j <= lines; ++j) {
      if (j == i) continue;
      for (std::size_t k = 1; k <= lines; ++k)
        if (k != i && k != j) builder.set(i, j, k, 1);
    }
  }
  return builder.build();
}

bool is_admissible_srg(long n, long k, long lambda, long mu) {
  return k >= 1 && k <= n - 2 && lambda >= 0 && lambda <= k - 1 && mu >= 0 && mu <= k &&
         k * (k - lambda - 1) == (n - k - 1) * mu && n - 2 * k + lambda >= 0 &&
         n - 2 * k + mu - 2 >= 0;
}

bool srg_multiplicities_integral(long n, long k, long lambda, long mu) {
  const long long diff = lambda - mu;
  const long long disc = diff * diff + 4LL * (k - mu);
  const long long num = 2LL * k + static_cast<long long>(n - 1) * diff;
  long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  long long f = 0;
  if (s * s == disc && s > 0) {
    if (num % s != 0) return false;
    long long twice = (n - 1) - num / s;
    if (twice % 2 != 0) return false;
    f = twice / 2;
  } else {
    if (num != 0 || (n - 1) % 2 != 0) return false;
    f = (n - 1) / 2;
  }
  long long g = (n - 1) - f;
  return f > 0 && g > 0;
}

StructureConstantTable srg_table(long n, long k, long lambda, long mu) {
  if (!is_admissible_srg(n, k, lambda, mu)) {
    throw DomainError("inadmissible parameters (" + std::to_string(n) + "," + std::to_string(k) +
                      "," + std::to_string(lambda) + "," + std::to_string(mu) + ")");
  }
  const long other = n - k - 1;
  TableBuilder builder(3);
  builder.identity_products().label(1, "g").label(2, "h").degree(1, k).degree(2, other);
  builder.set(1, 1, 0, k).set(1, 1, 1, lambda).set(1, 1, 2, mu);
  for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 1}})
    builder.set(a, b, 1, k - lambda - 1).set(a, b, 2, k - mu);
  builder.set(2, 2, 0, other).set(2, 2, 1, n - 2 * k + lambda).set(2, 2, 2, n - 2 * k + mu - 2);
  return builder.build();
}

SrgResult srg_algebra(long n, long k, long lambda, long mu, const CharacterOptions& opts) {
  SrgResult out{srg_table(n, k, lambda, mu), false, false, false, {}};
  CharacterData data = chartab::character_table(out.table, opts);
  out.integrality_ok = srg_multiplicities_integral(n, k, lambda, mu);
  out.standard_ok = chartab::check_standard_condition(data.table).in_standard_class;
  out.agree = out.integrality_ok == out.standard_ok;
  out.zeta = chartab::sorted_zeta(data.table);
  return out;
}

}  // namespace scheme
}  // namespace tabalg
