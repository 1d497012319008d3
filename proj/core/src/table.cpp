#include <algorithm>
#include <numeric>

#include "tabalg/errors.hpp"
#include "tabalg/table.hpp"

namespace tabalg {

namespace {

const Scalar& zero_scalar() {
  static const Scalar zero(0);
  return zero;
}

void require_conforms(const StructureConstantTable& t, const AlgebraElement& x) {
  if (x.size() != t.rank()) {
    throw StructuralError("element has " + std::to_string(x.size()) +
                          " coefficients, algebra rank is " + std::to_string(t.rank()));
  }
}

}  // namespace

std::string default_label(BasisIndex i) { return i == 0 ? "1" : "b" + std::to_string(i); }

// ---------------------------------------------------------------------------

const Scalar& StructureConstantTable::lambda(BasisIndex a, BasisIndex b, BasisIndex c) const {
  for (const Term& term : product(a, b)) {
    if (term.index == c) return term.value;
    if (term.index > c) break;
  }
  return zero_scalar();
}

std::span<const Term> StructureConstantTable::product(BasisIndex a, BasisIndex b) const {
  if (a >= rank_ || b >= rank_) throw StructuralError("basis index out of range");
  return products_[a * rank_ + b];
}

Scalar StructureConstantTable::b_plus() const {
  Scalar s = 0;
  for (const auto& d : degrees_) s += d;
  return s;
}

// ---------------------------------------------------------------------------

TableBuilder::TableBuilder(std::size_t rank)
    : rank_(rank),
      products_(rank * rank),
      star_(rank),
      star_set_(rank, false),
      degrees_(rank, Scalar(0)),
      declared_(rank, false),
      labels_(rank) {
  if (rank == 0) throw StructuralError("rank must be positive");
  std::iota(star_.begin(), star_.end(), BasisIndex{0});
  for (BasisIndex i = 0; i < rank; ++i) labels_[i] = default_label(i);
}

void TableBuilder::check(BasisIndex i, const char* what) const {
  if (i >= rank_) {
    throw StructuralError(std::string(what) + " index " + std::to_string(i) +
                          " out of range for rank " + std::to_string(rank_));
  }
}

TableBuilder& TableBuilder::set(BasisIndex a, BasisIndex b, BasisIndex c, const Scalar& value) {
  check(a, "structure constant");
  check(b, "structure constant");
  check(c, "structure constant");
  auto& terms = products_[a * rank_ + b];
  auto it = std::lower_bound(terms.begin(), terms.end(), c,
                             [](const Term& t, BasisIndex i) { return t.index < i; });
  const bool exact_zero = value.is_exact() && value.is_zero();
  if (it != terms.end() && it->index == c) {
    if (exact_zero) {
      terms.erase(it);
    } else {
      it->value = value;
    }
  } else if (!exact_zero) {
    terms.insert(it, Term{c, value});
  }
  return *this;
}

TableBuilder& TableBuilder::add(BasisIndex a, BasisIndex b, BasisIndex c, const Scalar& value) {
  check(a, "structure constant");
  check(b, "structure constant");
  check(c, "structure constant");
  Scalar current = 0;
  for (const Term& t : products_[a * rank_ + b]) {
    if (t.index == c) current = t.value;
  }
  return set(a, b, c, current + value);
}

TableBuilder& TableBuilder::star(BasisIndex i, BasisIndex j) {
  check(i, "star");
  check(j, "star");
  auto conflict = [&](BasisIndex x, BasisIndex y) {
    return star_set_[x] && star_[x] != y;
  };
  if (conflict(i, j) || conflict(j, i)) {
    throw StructuralError("conflicting star declarations for " + std::to_string(i) + " and " +
                          std::to_string(j));
  }
  star_[i] = j;
  star_[j] = i;
  star_set_[i] = star_set_[j] = true;
  return *this;
}

TableBuilder& TableBuilder::degree(BasisIndex i, const Scalar& value) {
  check(i, "degree");
  degrees_[i] = value;
  declared_[i] = true;
  return *this;
}

TableBuilder& TableBuilder::label(BasisIndex i, std::string name) {
  check(i, "label");
  labels_[i] = std::move(name);
  return *this;
}

TableBuilder& TableBuilder::identity_products() {
  for (BasisIndex b = 0; b < rank_; ++b) {
    set(0, b, b, 1);
    set(b, 0, b, 1);
  }
  return *this;
}

StructureConstantTable TableBuilder::build() const {
  std::vector<bool> seen(rank_, false);
  for (BasisIndex i = 0; i < rank_; ++i) {
    if (seen[star_[i]]) throw StructuralError("star is not a permutation");
    seen[star_[i]] = true;
  }
  StructureConstantTable t;
  t.rank_ = rank_;
  t.products_ = products_;
  t.star_ = star_;
  t.declared_ = declared_;
  t.labels_ = labels_;
  t.degrees_.resize(rank_);
  for (BasisIndex i = 0; i < rank_; ++i) {
    t.degrees_[i] = declared_[i] ? degrees_[i] : t.lambda(i, star_[i], 0);
  }
  t.exact_ = std::all_of(t.degrees_.begin(), t.degrees_.end(),
                         [](const Scalar& s) { return s.is_exact(); });
  for (const auto& terms : t.products_)
    for (const auto& term : terms) t.exact_ = t.exact_ && term.value.is_exact();
  return t;
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::basis(std::size_t rank, BasisIndex i) {
  AlgebraElement x(rank);
  x.coeffs.at(i) = 1;
  return x;
}

bool AlgebraElement::is_zero(double tol) const {
  return std::all_of(coeffs.begin(), coeffs.end(), [tol](const Scalar& s) { return s.is_zero(tol); });
}

bool AlgebraElement::is_exact() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_exact(); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.size() != size()) throw StructuralError("element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.size() != size()) throw StructuralError("element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

bool near(const AlgebraElement& x, const AlgebraElement& y, double tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!near(x[i], y[i], tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------

AlgebraElement multiply(const StructureConstantTable& t, const AlgebraElement& x,
                        const AlgebraElement& y) {
  require_conforms(t, x);
  require_conforms(t, y);
  AlgebraElement out(t.rank());
  for (BasisIndex a = 0; a < t.rank(); ++a) {
    if (x[a].is_zero(0.0)) continue;
    for (BasisIndex b = 0; b < t.rank(); ++b) {
      if (y[b].is_zero(0.0)) continue;
      Scalar xy = x[a] * y[b];
      for (const Term& term : t.product(a, b)) out[term.index] += xy * term.value;
    }
  }
  return out;
}

AlgebraElement star_element(const StructureConstantTable& t, const AlgebraElement& x) {
  require_conforms(t, x);
  AlgebraElement out(t.rank());
  for (BasisIndex b = 0; b < t.rank(); ++b) out[t.star(b)] = x[b].conj();
  return out;
}

Scalar bilinear_form(const StructureConstantTable& t, const AlgebraElement& x,
                     const AlgebraElement& y) {
  return multiply(t, x, star_element(t, y))[0];
}

Matrix left_matrix(const StructureConstantTable& t, const AlgebraElement& x) {
  require_conforms(t, x);
  Matrix m(t.rank(), t.rank());
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    if (x[b].is_zero(0.0)) continue;
    for (BasisIndex d = 0; d < t.rank(); ++d)
      for (const Term& term : t.product(b, d)) m(term.index, d) += x[b] * term.value;
  }
  return m;
}

std::vector<Matrix> regular_representation(const StructureConstantTable& t) {
  std::vector<Matrix> out;
  out.reserve(t.rank());
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    out.push_back(left_matrix(t, AlgebraElement::basis(t.rank(), b)));
  }
  return out;
}

Scalar regular_trace(const StructureConstantTable& t, const AlgebraElement& x) {
  require_conforms(t, x);
  Scalar tr = 0;
  for (BasisIndex b = 0; b < t.rank(); ++b) {
    if (x[b].is_zero(0.0)) continue;
    Scalar s = 0;
    for (BasisIndex d = 0; d < t.rank(); ++d) s += t.lambda(b, d, d);
    tr += x[b] * s;
  }
  return tr;
}

AlgebraElement subset_sum(std::size_t rank, std::span<const BasisIndex> members) {
  AlgebraElement x(rank);
  for (BasisIndex i : members) x.coeffs.at(i) += 1;
  return x;
}

// ---------------------------------------------------------------------------

bool is_table_algebra(const StructureConstantTable& t, double tol) {
  for (BasisIndex a = 0; a < t.rank(); ++a)
    for (BasisIndex b = 0; b < t.rank(); ++b)
      for (const Term& term : t.product(a, b))
        if (!term.value.is_nonnegative(tol)) return false;
  return true;
}

bool is_integral(const StructureConstantTable& t, double tol) {
  for (BasisIndex a = 0; a < t.rank(); ++a)
    for (BasisIndex b = 0; b < t.rank(); ++b)
      for (const Term& term : t.product(a, b))
        if (!term.value.is_integer(tol)) return false;
  return true;
}

bool is_commutative(const StructureConstantTable& t, double tol) {
  for (BasisIndex a = 0; a < t.rank(); ++a) {
    for (BasisIndex b = a + 1; b < t.rank(); ++b) {
      auto ab = t.product(a, b);
      auto ba = t.product(b, a);
      for (const Term& term : ab)
        if (!near(term.value, t.lambda(b, a, term.index), tol)) return false;
      for (const Term& term : ba)
        if (!near(term.value, t.lambda(a, b, term.index), tol)) return false;
    }
  }
  return true;
}

bool is_integral_degree(const StructureConstantTable& t, double tol) {
  return std::all_of(t.degrees().begin(), t.degrees().end(),
                     [tol](const Scalar& d) { return d.is_integer(tol); });
}

StructureConstantTable relabel(const StructureConstantTable& t,
                               std::span<const BasisIndex> perm) {
  const std::size_t n = t.rank();
  if (perm.size() != n) throw StructuralError("relabel: permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (BasisIndex p : perm) {
    if (p >= n || seen[p]) throw StructuralError("relabel: not a permutation");
    seen[p] = true;
  }
  if (perm[0] != 0) throw StructuralError("relabel: identity must stay at index 0");
  TableBuilder builder(n);
  for (BasisIndex a = 0; a < n; ++a)
    for (BasisIndex b = 0; b < n; ++b)
      for (const Term& term : t.product(a, b)) builder.set(perm[a], perm[b], perm[term.index], term.value);
  for (BasisIndex i = 0; i < n; ++i) {
    if (t.star(i) != i) builder.star(perm[i], perm[t.star(i)]);
    if (t.degree_declared(i)) builder.degree(perm[i], t.degree(i));
    builder.label(perm[i], t.label(i));
  }
  return builder.build();
}

}  // namespace tabalg
