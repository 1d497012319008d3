#include "tabalg/closed.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tabalg/errors.hpp"

namespace tabalg {

bool ClosedSubset::contains(BasisIndex i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::size_t QuotientAlgebra::coset_of(BasisIndex b) const {
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), b)) return i;
  throw StructuralError("basis index " + std::to_string(b) + " lies in no double coset");
}

namespace closed {

namespace {

ClosedSubset make_subset(const StructureConstantTable& t, std::vector<bool> in) {
  ClosedSubset c;
  c.c_plus_degree = 0;
  for (BasisIndex i = 0; i < t.rank(); ++i) {
    if (!in[i]) continue;
    c.members.push_back(i);
    c.c_plus_degree += t.degree(i);
  }
  return c;
}

std::vector<BasisIndex> support(const AlgebraElement& x, double tol) {
  std::vector<BasisIndex> s;
  for (BasisIndex i = 0; i < x.size(); ++i)
    if (!x[i].is_zero(tol)) s.push_back(i);
  return s;
}

}  // namespace

bool is_closed(const StructureConstantTable& t, std::span<const BasisIndex> members) {
  std::vector<bool> in(t.rank(), false);
  for (BasisIndex i : members) {
    if (i >= t.rank()) throw StructuralError("subset index out of range");
    in[i] = true;
  }
  if (!in[0]) return false;
  for (BasisIndex a : members)
    for (BasisIndex b : members)
      for (const Term& term : t.product(t.star(a), b))
        if (!term.value.is_zero() && !in[term.index]) return false;
  return true;
}

ClosedSubset closure(const StructureConstantTable& t, std::span<const BasisIndex> seed) {
  std::vector<bool> in(t.rank(), false);
  in[0] = true;
  for (BasisIndex i : seed) {
    if (i >= t.rank()) throw StructuralError("seed index out of range");
    in[i] = true;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (BasisIndex a = 0; a < t.rank(); ++a) {
      if (!in[a]) continue;
      for (BasisIndex b = 0; b < t.rank(); ++b) {
        if (!in[b]) continue;
        for (const Term& term : t.product(t.star(a), b)) {
          if (!in[term.index] && !term.value.is_zero()) {
            in[term.index] = true;
            grew = true;
          }
        }
      }
    }
  }
  return make_subset(t, std::move(in));
}

std::vector<ClosedSubset> enumerate_closed_subsets(const StructureConstantTable& t,
                                                   std::size_t rank_guard) {
  if (t.rank() > rank_guard) {
    throw DomainError("rank " + std::to_string(t.rank()) + " exceeds the enumeration guard of " +
                      std::to_string(rank_guard));
  }
  // Every closed subset is reached from {1} by adjoining one element at a
  // time and closing, so a search over closures of S + {b} is complete.
  std::set<std::vector<BasisIndex>> seen;
  std::vector<ClosedSubset> found;
  std::deque<ClosedSubset> queue;
  ClosedSubset start = closure(t, {});
  seen.insert(start.members);
  queue.push_back(start);
  while (!queue.empty()) {
    ClosedSubset s = std::move(queue.front());
    queue.pop_front();
    for (BasisIndex b = 0; b < t.rank(); ++b) {
      if (s.contains(b)) continue;
      std::vector<BasisIndex> seed = s.members;
      seed.push_back(b);
      ClosedSubset next = closure(t, seed);
      if (seen.insert(next.members).second) queue.push_back(next);
    }
    found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end(), [](const ClosedSubset& a, const ClosedSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return found;
}

AlgebraElement subset_idempotent(const StructureConstantTable& t, const ClosedSubset& c) {
  AlgebraElement e = subset_sum(t.rank(), c.members);
  e *= Scalar(1) / c.c_plus_degree;
  return e;
}

std::vector<std::vector<BasisIndex>> double_cosets(const StructureConstantTable& t,
                                                   const ClosedSubset& c, double tol) {
  const std::size_t n = t.rank();
  AlgebraElement cplus = subset_sum(n, c.members);
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<BasisIndex>> cosets;
  for (BasisIndex b = 0; b < n; ++b) {
    if (assigned[b]) continue;
    AlgebraElement x = multiply(t, multiply(t, cplus, AlgebraElement::basis(n, b)), cplus);
    auto coset = support(x, tol);
    if (!std::binary_search(coset.begin(), coset.end(), b)) {
      throw IntegrityError("double coset of " + t.label(b) + " does not contain it");
    }
    for (BasisIndex m : coset) {
      if (assigned[m]) {
        throw IntegrityError("double cosets of " + t.label(b) + " and " + t.label(m) +
                             " overlap without coinciding");
      }
      assigned[m] = true;
    }
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

QuotientAlgebra quotient(const StructureConstantTable& t, const ClosedSubset& c, double tol) {
  if (!is_table_algebra(t, tol)) throw StructuralError("quotient requires a table algebra");
  if (!is_closed(t, c.members)) throw StructuralError("subset is not closed");
  const std::size_t n = t.rank();

  QuotientAlgebra q{t, c, {}, double_cosets(t, c, tol), t, {}};
  const std::size_t k = q.cosets.size();
  for (const auto& coset : q.cosets) q.coset_reps.push_back(coset.front());
  std::vector<std::size_t> coset_index(n);
  for (std::size_t i = 0; i < k; ++i)
    for (BasisIndex m : q.cosets[i]) coset_index[m] = i;

  const Scalar& cplus = c.c_plus_degree;
  TableBuilder builder(k);
  for (std::size_t i = 0; i < k; ++i) {
    Scalar deg = 0;
    for (BasisIndex m : q.cosets[i]) deg += t.degree(m);
    deg /= cplus;
    q.quotient_degrees.push_back(deg);
    builder.degree(i, deg);
    builder.label(i, t.label(q.coset_reps[i]) + "/C");
    std::size_t si = coset_index[t.star(q.coset_reps[i])];
    if (si != i) builder.star(i, si);
  }

  std::vector<Scalar> acc(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::fill(acc.begin(), acc.end(), Scalar(0));
      for (BasisIndex r : q.cosets[i])
        for (BasisIndex s : q.cosets[j])
          for (const Term& term : t.product(r, s)) acc[term.index] += term.value;
      for (std::size_t target = 0; target < k; ++target) {
        const auto& coset = q.cosets[target];
        const Scalar& first = acc[coset.front()];
        for (BasisIndex m : coset) {
          if (!near(acc[m], first, tol)) {
            throw IntegrityError("quotient constant (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(target) +
                                 ") depends on the representative: " + first.str() + " at " +
                                 t.label(coset.front()) + " vs " + acc[m].str() + " at " +
                                 t.label(m));
          }
        }
        builder.set(i, j, target, first / cplus);
      }
    }
  }
  q.table = builder.build();
  auto report = validate(q.table, tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw IntegrityError("quotient fails " + to_string(v.axiom) + ": " + v.detail);
  }
  return q;
}

bool verify_embedding(const QuotientAlgebra& q, double tol) {
  const auto& t = q.parent;
  const std::size_t k = q.cosets.size();
  std::vector<AlgebraElement> u;
  for (const auto& coset : q.cosets) {
    AlgebraElement x = subset_sum(t.rank(), coset);
    x *= Scalar(1) / q.subset.c_plus_degree;
    u.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      AlgebraElement expected(t.rank());
      for (const Term& term : q.table.product(i, j)) expected += u[term.index] * term.value;
      if (!near(multiply(t, u[i], u[j]), expected, tol)) return false;
    }
  }
  return true;
}

std::optional<AlgebraElement> to_quotient_coordinates(const QuotientAlgebra& q,
                                                      const AlgebraElement& x, double tol) {
  AlgebraElement y(q.cosets.size());
  for (std::size_t i = 0; i < q.cosets.size(); ++i) {
    const Scalar& first = x[q.cosets[i].front()];
    for (BasisIndex m : q.cosets[i])
      if (!near(x[m], first, tol)) return std::nullopt;
    y[i] = first * q.subset.c_plus_degree;
  }
  return y;
}

std::vector<IdempotentImage> quotient_idempotent_images(const StructureConstantTable& t,
                                                        const ClosedSubset& c,
                                                        const IdempotentSet& idems,
                                                        double tol) {
  AlgebraElement e = subset_idempotent(t, c);
  std::vector<IdempotentImage> out;
  for (std::size_t chi = 0; chi < idems.idempotents.size(); ++chi) {
    AlgebraElement image = multiply(t, e, idems.idempotents[chi]);
    bool zero = image.is_zero(tol);
    out.push_back({chi, std::move(image), zero});
  }
  return out;
}

PreservationReport quotient_multiplicity_preservation(const StructureConstantTable& t,
                                                      const ClosedSubset& c,
                                                      const CharacterOptions& opts) {
  const double tol = std::max(opts.tolerance, 1e-6);
  PreservationReport report;
  CharacterData parent = chartab::character_table(t, opts);
  QuotientAlgebra q = quotient(t, c, opts.tolerance);
  CharacterData sub = chartab::character_table(q.table, opts);
  report.quotient_rank = sub.table.size();

  auto images = quotient_idempotent_images(t, c, parent.idempotents, tol);
  std::vector<bool> used(sub.table.size(), false);
  bool ok = true;
  for (const auto& img : images) {
    if (img.is_zero) continue;
    ++report.nonzero_images;
    auto coords = to_quotient_coordinates(q, img.image, tol);
    if (!coords) {
      ok = false;
      continue;
    }
    auto& qidems = sub.idempotents.idempotents;
    auto it = std::find_if(qidems.begin(), qidems.end(),
                           [&](const AlgebraElement& e) { return near(e, *coords, tol); });
    if (it == qidems.end()) {
      ok = false;
      continue;
    }
    std::size_t j = static_cast<std::size_t>(it - qidems.begin());
    if (used[j]) ok = false;
    used[j] = true;
    MultiplicityMatch m{img.character, j, parent.table.zeta[img.character], sub.table.zeta[j]};
    if (!near(m.parent_zeta, m.quotient_zeta, tol)) ok = false;
    report.matches.push_back(std::move(m));
  }
  report.holds = ok && report.nonzero_images == sub.table.size();
  return report;
}

}  // namespace closed
}  // namespace tabalg
