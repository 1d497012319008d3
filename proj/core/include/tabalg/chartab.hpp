#ifndef TABALG_CHARTAB_HPP
#define TABALG_CHARTAB_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tabalg/matrix.hpp"
#include "tabalg/table.hpp"

namespace tabalg {

/// Irreducible characters of a C-algebra together with the multiplicities of
/// the standard feasible trace zeta(b) = delta(b, 1) |B+|.
///
/// Rows are characters, columns basis elements. The principal character
/// (chi(b) = |b|) is row 0; the remaining rows are sorted by value vector in
/// descending lexicographic order.
struct CharacterTable {
  std::vector<std::vector<Scalar>> values;  // values[chi][b] = chi(b)
  std::vector<Scalar> degrees;              // chi(1)
  std::vector<Scalar> zeta;                 // zeta_chi
  Scalar b_plus;
  std::size_t principal_row = 0;
  bool commutative = true;
  /// Every value, degree and multiplicity is an exact rational.
  bool exact = false;
  /// Non-fatal findings, e.g. a character degree that is not an integer.
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return values.size(); }
};

/// Central primitive idempotents, aligned with CharacterTable rows.
struct IdempotentSet {
  std::vector<AlgebraElement> idempotents;
};

struct CharacterData {
  CharacterTable table;
  IdempotentSet idempotents;
};

struct CharacterOptions {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 20240601;
  /// Throw ExactnessError instead of falling back to floating values.
  bool require_exact = false;
};

namespace chartab {

/// Basis of the center {x : xb = bx for all b}.
std::vector<AlgebraElement> center_basis(const StructureConstantTable& t,
                                         double tol = kDefaultTolerance);

/// Characters and central primitive idempotents.
///
/// Commutative algebras are handled by simultaneously diagonalizing the
/// left-regular matrices; each joint left eigenvector normalized at 1_A is a
/// character, and zeta solves sum_chi zeta_chi chi(b) = delta(b,1)|B+|.
/// Noncommutative algebras go through the center: central primitive
/// idempotents are Lagrange polynomials in a generic central element,
/// chi(1)^2 is the regular trace of the idempotent and zeta_chi is
/// |B+| times its 1_A coefficient divided by chi(1).
///
/// When the table is exact, the floating result is rationalized and then
/// verified with exact arithmetic; if the verification passes every entry is
/// exact. Throws NumericalDegeneracy when characters cannot be separated.
CharacterData character_table(const StructureConstantTable& t, const CharacterOptions& opts = {});

/// zeta(b) = delta(b, 1) |B+|, one entry per basis element.
std::vector<Scalar> standard_trace(const StructureConstantTable& t);

struct StandardVerdict {
  bool in_standard_class = false;
  /// (row, zeta_chi) for every multiplicity that is not a positive integer.
  std::vector<std::pair<std::size_t, Scalar>> offending;
};

/// Membership in the class of algebras whose standard feasible trace is a
/// character: every zeta_chi a positive integer. Approximate values use
/// |zeta - round(zeta)| < tolerance.
StandardVerdict check_standard_condition(const CharacterTable& ct, double tolerance = 1e-6);

struct OrthogonalityResiduals {
  /// (phi, psi): (1/|B+|) sum_b phi(b*) psi(b) / |b*|  -  delta phi(1)/zeta_phi
  Matrix rows;
  /// Commutative only, (b, c): sum_chi zeta_chi chi(b) chi(c*) - delta |b| |B+|
  Matrix columns;
  bool has_columns = false;

  /// Largest absolute residual over both matrices.
  double max_abs() const;
  /// Every residual is exactly zero (all exact) or within tol.
  bool vanishes(double tol = kDefaultTolerance) const;
};

OrthogonalityResiduals orthogonality_residual(const CharacterTable& ct,
                                              const StructureConstantTable& t);

/// |zeta_chi| >= 1/chi(1) for every row, and |zeta_chi| >= 1 when
/// commutative.
bool multiplicity_bound_check(const CharacterTable& ct, double tol = kDefaultTolerance);

/// |chi(a)| <= |a| chi(1) for every character and basis element.
bool character_value_bound_check(const CharacterTable& ct, const StructureConstantTable& t,
                                 double tol = kDefaultTolerance);

/// sum_chi zeta_chi chi(b) == zeta(b) for every b.
bool reconstructs_standard_trace(const CharacterTable& ct, const StructureConstantTable& t,
                                 double tol = kDefaultTolerance);

/// Idempotents are idempotent, pairwise orthogonal, central and sum to 1_A.
bool idempotent_axioms_hold(const StructureConstantTable& t, const IdempotentSet& idems,
                            double tol = kDefaultTolerance);

/// epsilon_chi = (1/|B+|) sum_b zeta_chi chi(b*)/|b*| b, evaluated from the
/// table's characters and multiplicities.
AlgebraElement idempotent_from_character(const CharacterTable& ct, std::size_t row,
                                         const StructureConstantTable& t);

/// Candidate isomorphism b -> scale[b] * image[b].
struct BasisMap {
  std::vector<BasisIndex> image;
  std::vector<Scalar> scale;

  static BasisMap permutation(std::vector<BasisIndex> image);
};

/// True iff the map preserves products and star and sends B onto B'.
/// Throws StructuralError if the map is not a bijection between bases.
bool isomorphism_check(const StructureConstantTable& t1, const StructureConstantTable& t2,
                       const BasisMap& map, double tol = kDefaultTolerance);

/// Sorted multisets of multiplicities agree within tol.
bool multiset_zeta_equal(const CharacterTable& a, const CharacterTable& b,
                         double tol = kDefaultTolerance);

/// Multiplicities sorted by compare().
std::vector<Scalar> sorted_zeta(const CharacterTable& ct, double tol = kDefaultTolerance);

}  // namespace chartab
}  // namespace tabalg

#endif  // TABALG_CHARTAB_HPP
