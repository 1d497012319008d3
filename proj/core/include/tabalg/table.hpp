#ifndef TABALG_TABLE_HPP
#define TABALG_TABLE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tabalg/matrix.hpp"
#include "tabalg/scalar.hpp"

namespace tabalg {

/// Position of a basis element; index 0 is always the identity 1_A.
using BasisIndex = std::size_t;

/// One nonzero structure constant in the expansion of a product a*b.
struct Term {
  BasisIndex index;
  Scalar value;
};

class TableBuilder;

/// A finite-dimensional algebra with distinguished basis, given by its
/// structure constants lambda(a, b, c) (ab = sum_c lambda(a, b, c) c), an
/// involution on basis indices and a degree per basis element.
///
/// Immutable once built; share freely between threads. Construction only
/// checks that the data are well-formed (indices in range, star a
/// permutation). The algebra axioms are checked by validate().
class StructureConstantTable {
 public:
  std::size_t rank() const noexcept { return rank_; }

  /// lambda(a, b, c); zero when absent.
  const Scalar& lambda(BasisIndex a, BasisIndex b, BasisIndex c) const;

  /// Nonzero terms of a*b, sorted by index.
  std::span<const Term> product(BasisIndex a, BasisIndex b) const;

  BasisIndex star(BasisIndex i) const { return star_.at(i); }
  const std::vector<BasisIndex>& star_map() const noexcept { return star_; }

  const Scalar& degree(BasisIndex i) const { return degrees_.at(i); }
  const std::vector<Scalar>& degrees() const noexcept { return degrees_; }
  /// True if the degree was given explicitly rather than read off
  /// lambda(i, star(i), 0).
  bool degree_declared(BasisIndex i) const { return declared_.at(i); }

  const std::string& label(BasisIndex i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// All constants and degrees are exact rationals.
  bool is_exact() const noexcept { return exact_; }

  /// Sum of all degrees, |B+|.
  Scalar b_plus() const;

 private:
  friend class TableBuilder;
  StructureConstantTable() = default;

  std::size_t rank_ = 0;
  std::vector<std::vector<Term>> products_;  // indexed a * rank + b
  std::vector<BasisIndex> star_;
  std::vector<Scalar> degrees_;
  std::vector<bool> declared_;
  std::vector<std::string> labels_;
  bool exact_ = true;
};

/// Accumulates structure constants and produces an immutable table.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t rank);

  /// Overwrites lambda(a, b, c); setting zero erases the entry.
  TableBuilder& set(BasisIndex a, BasisIndex b, BasisIndex c, const Scalar& value);
  TableBuilder& add(BasisIndex a, BasisIndex b, BasisIndex c, const Scalar& value);
  /// Declares i* = j and j* = i. Conflicting declarations throw.
  TableBuilder& star(BasisIndex i, BasisIndex j);
  TableBuilder& degree(BasisIndex i, const Scalar& value);
  TableBuilder& label(BasisIndex i, std::string name);
  /// Fills lambda(0, b, b) = lambda(b, 0, b) = 1.
  TableBuilder& identity_products();

  std::size_t rank() const noexcept { return rank_; }

  /// Throws StructuralError if star is not a permutation.
  StructureConstantTable build() const;

 private:
  void check(BasisIndex i, const char* what) const;

  std::size_t rank_;
  std::vector<std::vector<Term>> products_;
  std::vector<BasisIndex> star_;
  std::vector<bool> star_set_;
  std::vector<Scalar> degrees_;
  std::vector<bool> declared_;
  std::vector<std::string> labels_;
};

/// Default label: "1" for the identity, "b<i>" otherwise.
std::string default_label(BasisIndex i);

/// Coefficient vector over the basis of a specific table.
struct AlgebraElement {
  std::vector<Scalar> coeffs;

  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t rank) : coeffs(rank, Scalar(0)) {}
  explicit AlgebraElement(std::vector<Scalar> c) : coeffs(std::move(c)) {}

  static AlgebraElement basis(std::size_t rank, BasisIndex i);
  static AlgebraElement unit(std::size_t rank) { return basis(rank, 0); }

  std::size_t size() const noexcept { return coeffs.size(); }
  Scalar& operator[](std::size_t i) { return coeffs[i]; }
  const Scalar& operator[](std::size_t i) const { return coeffs[i]; }

  bool is_zero(double tol = kDefaultTolerance) const;
  bool is_exact() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& s) { return a *= s; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
};

bool near(const AlgebraElement& x, const AlgebraElement& y, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Axiom checking

enum class Axiom {
  StarInvolution,      // star(star(i)) = i, star(0) = 0
  Identity,            // lambda(0,b,c) = lambda(b,0,c) = delta(b,c)
  RealConstants,       // imaginary structure constants
  StarAntiAutomorphism,// lambda(a*,b*,c*) = lambda(b,a,c)
  UnitCoefficient,     // lambda(a,b,0) = delta(a,b*) |a|, |a| > 0
  DegreeHomomorphism,  // sum_c lambda(a,b,c)|c| = |a||b|, |b*| = |b|
  Associativity,
};

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<BasisIndex> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(Axiom axiom) const;
};

/// Lists every axiom violation. Exact tables are checked exactly; tol only
/// applies to approximate entries.
ValidationReport validate(const StructureConstantTable& t, double tol = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Arithmetic

AlgebraElement multiply(const StructureConstantTable& t, const AlgebraElement& x,
                        const AlgebraElement& y);

/// Semilinear involution: coefficients are conjugated and moved to star(b).
AlgebraElement star_element(const StructureConstantTable& t, const AlgebraElement& x);

/// Coefficient of 1_A in x y*.
Scalar bilinear_form(const StructureConstantTable& t, const AlgebraElement& x,
                     const AlgebraElement& y);

/// Left-regular matrix of x: column d holds the coefficients of x d.
Matrix left_matrix(const StructureConstantTable& t, const AlgebraElement& x);

/// L(b) for every basis element, L(b)(c, d) = lambda(b, d, c).
std::vector<Matrix> regular_representation(const StructureConstantTable& t);

/// Trace of the left-regular matrix of x.
Scalar regular_trace(const StructureConstantTable& t, const AlgebraElement& x);

/// Element sum_{i in members} b_i.
AlgebraElement subset_sum(std::size_t rank, std::span<const BasisIndex> members);

// ---------------------------------------------------------------------------
// Classification

/// All constants real and nonnegative.
bool is_table_algebra(const StructureConstantTable& t, double tol = kDefaultTolerance);
/// All constants integers.
bool is_integral(const StructureConstantTable& t, double tol = kDefaultTolerance);
bool is_commutative(const StructureConstantTable& t, double tol = kDefaultTolerance);
/// All degrees integers.
bool is_integral_degree(const StructureConstantTable& t, double tol = kDefaultTolerance);

/// Copy with basis index i moved to perm[i]; perm[0] must be 0.
StructureConstantTable relabel(const StructureConstantTable& t,
                               std::span<const BasisIndex> perm);

}  // namespace tabalg

#endif  // TABALG_TABLE_HPP
