#ifndef TABALG_DUALITY_HPP
#define TABALG_DUALITY_HPP

#include <cstddef>
#include <vector>

#include "tabalg/chartab.hpp"
#include "tabalg/matrix.hpp"
#include "tabalg/table.hpp"

namespace tabalg {

/// P[chi][b] = chi(b) and Q[b][chi] = q_chi(b), with PQ = QP = |B+| I.
struct EigenmatrixPair {
  Matrix P;
  Matrix Q;
  Scalar b_plus;
};

/// Dual C-algebra on the basis {D*_chi}, one element per row of the origin
/// character table and in the same order; D*_rho is index 0.
struct DualAlgebra {
  StructureConstantTable table;
  CharacterTable origin;
  /// conjugate[chi] is the row of the complex-conjugate character.
  std::vector<std::size_t> conjugate;
};

namespace duality {

/// Throws Unsupported for noncommutative tables and IntegrityError if P is
/// singular.
EigenmatrixPair eigenmatrices(const StructureConstantTable& t, const CharacterTable& ct,
                              double tol = kDefaultTolerance);

/// q_chi(b) = zeta_chi chi(b*) / |b|, read from the idempotent expansion.
/// Agrees with Q = |B+| P^{-1} by column orthogonality.
Matrix q_from_idempotents(const StructureConstantTable& t, const CharacterTable& ct);

/// Structure constants
///   q^chi_{phi psi} = zeta_phi zeta_psi / |B+| * sum_b p_b(phi) p_b(psi) conj(p_b(chi)) / |b|^2,
/// degrees zeta_chi and star chi -> conj(chi). The result is checked against
/// the C-algebra axioms (IntegrityError on failure). Throws Unsupported for
/// noncommutative tables.
DualAlgebra dual_algebra(const StructureConstantTable& t, const CharacterTable& ct,
                         double tol = kDefaultTolerance);

/// f_b = |B^+|^{-1} sum_chi p_b(chi) D*_chi, one per primal basis element.
std::vector<AlgebraElement> dual_idempotents(const DualAlgebra& da);

struct MultisetComparison {
  bool holds = false;
  std::vector<Scalar> lhs;  // sorted
  std::vector<Scalar> rhs;  // sorted
};

/// Multiplicities of the dual's standard feasible trace, computed by running
/// the character table on the dual, against the primal degrees.
MultisetComparison dual_zeta_matches_degrees(const StructureConstantTable& t,
                                             const CharacterTable& ct,
                                             const CharacterOptions& opts = {});

struct DualityConsistency {
  bool primal_integral_degree = false;
  bool primal_in_standard_class = false;
  bool dual_integral_degree = false;
  bool dual_in_standard_class = false;
  /// (integral degree and in S) agree between primal and dual.
  bool consistent = false;
  /// zeta multiset of the double dual equals the primal one.
  bool double_dual_zeta_matches = false;
  std::vector<Scalar> double_dual_zeta;
};

DualityConsistency duality_standard_consistency(const StructureConstantTable& t,
                                                const CharacterTable& ct,
                                                const CharacterOptions& opts = {},
                                                double multiset_tol = kDefaultTolerance);

}  // namespace duality
}  // namespace tabalg

#endif  // TABALG_DUALITY_HPP
