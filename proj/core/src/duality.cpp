#include "tabalg/duality.hpp"

#include <algorithm>
#include <cmath>

#include "tabalg/errors.hpp"

namespace tabalg::duality {

namespace {

constexpr double kPairingTolerance = 1e-6;
constexpr double kImagRoundoff = 1e-10;

void require_commutative(const CharacterTable& ct, const char* what) {
  if (!ct.commutative) {
    throw Unsupported(std::string(what) + " is defined for commutative algebras only");
  }
}

// Drops floating imaginary parts that are pure roundoff.
Scalar clean(const Scalar& v) {
  if (v.is_exact()) return v;
  if (std::abs(v.imag()) <= kImagRoundoff * std::max(1.0, v.abs())) return Scalar(v.real());
  return v;
}

std::vector<std::size_t> conjugate_pairing(const CharacterTable& ct) {
  std::vector<std::size_t> conj(ct.size());
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    auto matches = [&](std::size_t psi) {
      for (std::size_t b = 0; b < ct.values[chi].size(); ++b)
        if (!near(ct.values[psi][b], ct.values[chi][b].conj(), kPairingTolerance)) return false;
      return true;
    };
    std::size_t psi = 0;
    while (psi < ct.size() && !matches(psi)) ++psi;
    if (psi == ct.size()) {
      throw IntegrityError("character " + std::to_string(chi) + " has no conjugate row");
    }
    conj[chi] = psi;
  }
  return conj;
}

std::vector<Scalar> sorted(std::vector<Scalar> v, double tol) {
  std::sort(v.begin(), v.end(),
            [tol](const Scalar& a, const Scalar& b) { return compare(a, b, tol) < 0; });
  return v;
}

bool same_multiset(const std::vector<Scalar>& a, const std::vector<Scalar>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!near(a[i], b[i], tol)) return false;
  return true;
}

}  // namespace

EigenmatrixPair eigenmatrices(const StructureConstantTable& t, const CharacterTable& ct,
                              double tol) {
  require_commutative(ct, "eigenmatrices");
  const std::size_t d = ct.size();
  if (d != t.rank()) throw IntegrityError("character table size does not match the rank");
  EigenmatrixPair out{Matrix(d, d), Matrix(), ct.b_plus};
  for (std::size_t chi = 0; chi < d; ++chi)
    for (std::size_t b = 0; b < d; ++b) out.P(chi, b) = ct.values[chi][b];
  auto inv = inverse(out.P, tol);
  if (!inv) throw IntegrityError("first eigenmatrix is singular");
  out.Q = *inv * ct.b_plus;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out.Q(r, c) = clean(out.Q(r, c));
  return out;
}

Matrix q_from_idempotents(const StructureConstantTable& t, const CharacterTable& ct) {
  require_commutative(ct, "second eigenmatrix");
  const std::size_t d = ct.size();
  Matrix q(t.rank(), d);
  for (std::size_t b = 0; b < t.rank(); ++b)
    for (std::size_t chi = 0; chi < d; ++chi)
      q(b, chi) = clean(ct.zeta[chi] * ct.values[chi][t.star(b)] / t.degree(b));
  return q;
}

DualAlgebra dual_algebra(const StructureConstantTable& t, const CharacterTable& ct, double tol) {
  require_commutative(ct, "the dual algebra");
  if (ct.principal_row != 0) throw IntegrityError("principal character is not the first row");
  const std::size_t d = ct.size();
  const std::size_t n = t.rank();
  std::vector<std::size_t> conj = conjugate_pairing(ct);

  std::vector<Scalar> inv_sq_degree(n);
  for (std::size_t b = 0; b < n; ++b)
    inv_sq_degree[b] = Scalar(1) / (t.degree(b) * t.degree(b));

  TableBuilder builder(d);
  for (std::size_t chi = 0; chi < d; ++chi) {
    builder.degree(chi, clean(ct.zeta[chi]));
    if (chi != 0) builder.label(chi, "chi" + std::to_string(chi) + "*");
    if (conj[chi] != chi) builder.star(chi, conj[chi]);
  }
  for (std::size_t phi = 0; phi < d; ++phi) {
    for (std::size_t psi = 0; psi < d; ++psi) {
      Scalar front = ct.zeta[phi] * ct.zeta[psi] / ct.b_plus;
      for (std::size_t chi = 0; chi < d; ++chi) {
        Scalar sum = 0;
        for (std::size_t b = 0; b < n; ++b) {
          sum += ct.values[phi][b] * ct.values[psi][b] * ct.values[chi][b].conj() *
                 inv_sq_degree[b];
        }
        Scalar value = clean(front * sum);
        if (value.is_exact() ? value.is_zero() : value.is_zero(kImagRoundoff)) continue;
        builder.set(phi, psi, chi, value);
      }
    }
  }
  DualAlgebra out{builder.build(), ct, std::move(conj)};
  auto report = validate(out.table, tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw IntegrityError("dual algebra fails " + to_string(v.axiom) + ": " + v.detail);
  }
  return out;
}

std::vector<AlgebraElement> dual_idempotents(const DualAlgebra& da) {
  const auto& ct = da.origin;
  const std::size_t n = ct.values.empty() ? 0 : ct.values.front().size();
  Scalar scale = Scalar(1) / da.table.b_plus();
  std::vector<AlgebraElement> out;
  for (std::size_t b = 0; b < n; ++b) {
    AlgebraElement f(ct.size());
    for (std::size_t chi = 0; chi < ct.size(); ++chi) f[chi] = clean(ct.values[chi][b] * scale);
    out.push_back(std::move(f));
  }
  return out;
}

MultisetComparison dual_zeta_matches_degrees(const StructureConstantTable& t,
                                             const CharacterTable& ct,
                                             const CharacterOptions& opts) {
  DualAlgebra da = dual_algebra(t, ct, opts.tolerance);
  CharacterData dual = chartab::character_table(da.table, opts);
  const double tol = std::max(opts.tolerance, kDefaultTolerance);
  MultisetComparison out;
  out.lhs = sorted(dual.table.zeta, tol);
  out.rhs = sorted(t.degrees(), tol);
  out.holds = same_multiset(out.lhs, out.rhs, tol);
  return out;
}

DualityConsistency duality_standard_consistency(const StructureConstantTable& t,
                                                const CharacterTable& ct,
                                                const CharacterOptions& opts,
                                                double multiset_tol) {
  DualityConsistency out;
  out.primal_integral_degree = is_integral_degree(t, opts.tolerance);
  out.primal_in_standard_class = chartab::check_standard_condition(ct).in_standard_class;

  DualAlgebra da = dual_algebra(t, ct, opts.tolerance);
  CharacterData dual = chartab::character_table(da.table, opts);
  out.dual_integral_degree = is_integral_degree(da.table, opts.tolerance);
  out.dual_in_standard_class = chartab::check_standard_condition(dual.table).in_standard_class;
  out.consistent = (out.primal_integral_degree && out.primal_in_standard_class) ==
                   (out.dual_integral_degree && out.dual_in_standard_class);

  DualAlgebra dd = dual_algebra(da.table, dual.table, opts.tolerance);
  CharacterData double_dual = chartab::character_table(dd.table, opts);
  out.double_dual_zeta = sorted(double_dual.table.zeta, multiset_tol);
  out.double_dual_zeta_matches =
      same_multiset(out.double_dual_zeta, sorted(ct.zeta, multiset_tol), multiset_tol);
  return out;
}

}  // namespace tabalg::duality
