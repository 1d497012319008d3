#ifndef TABALG_CLOSED_HPP
#define TABALG_CLOSED_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tabalg/chartab.hpp"
#include "tabalg/table.hpp"

namespace tabalg {

/// A closed subset C of the basis (C* C contained in C), always containing 1_A.
struct ClosedSubset {
  std::vector<BasisIndex> members;  // sorted
  Scalar c_plus_degree;             // |C+| = sum of member degrees

  bool contains(BasisIndex i) const;
  friend bool operator==(const ClosedSubset& a, const ClosedSubset& b) {
    return a.members == b.members;
  }
};

/// The quotient table algebra A//C on double-coset representatives.
struct QuotientAlgebra {
  StructureConstantTable parent;
  ClosedSubset subset;
  /// One representative per double coset, the smallest index in it;
  /// coset_reps[0] = 0.
  std::vector<BasisIndex> coset_reps;
  /// cosets[i] = C b_i C, sorted; cosets ordered by smallest member.
  std::vector<std::vector<BasisIndex>> cosets;
  /// Basis b_i/C labelled "<rep-label>/C".
  StructureConstantTable table;
  std::vector<Scalar> quotient_degrees;

  /// Index of the coset containing basis element b.
  std::size_t coset_of(BasisIndex b) const;
};

namespace closed {

inline constexpr std::size_t kDefaultRankGuard = 20;

/// True iff 1_A is in the set and every c with lambda(a*, b, c) != 0 for
/// a, b in the set is in the set.
bool is_closed(const StructureConstantTable& t, std::span<const BasisIndex> members);

/// Smallest closed subset containing seed and 1_A.
ClosedSubset closure(const StructureConstantTable& t, std::span<const BasisIndex> seed);

/// Every closed subset, sorted by (size, members). Throws DomainError when the
/// rank exceeds rank_guard.
std::vector<ClosedSubset> enumerate_closed_subsets(const StructureConstantTable& t,
                                                   std::size_t rank_guard = kDefaultRankGuard);

/// e = |C+|^{-1} C+.
AlgebraElement subset_idempotent(const StructureConstantTable& t, const ClosedSubset& c);

/// Double cosets C b C as supports of C+ b C+.
std::vector<std::vector<BasisIndex>> double_cosets(const StructureConstantTable& t,
                                                   const ClosedSubset& c,
                                                   double tol = kDefaultTolerance);

/// Quotient by a closed subset. Every structure constant is evaluated for
/// every choice of representative t in the target coset; disagreement throws
/// IntegrityError, as does a result failing validate(). Requires a table
/// algebra (StructuralError otherwise).
QuotientAlgebra quotient(const StructureConstantTable& t, const ClosedSubset& c,
                         double tol = kDefaultTolerance);

/// Checks that b_i/C = |C+|^{-1} (C b_i C)+ multiply inside the parent
/// exactly as the quotient constants say, i.e. that eAe realizes the quotient.
bool verify_embedding(const QuotientAlgebra& q, double tol = kDefaultTolerance);

/// Parent element of eAe written in the quotient basis; nullopt if its
/// coefficients are not constant on double cosets.
std::optional<AlgebraElement> to_quotient_coordinates(const QuotientAlgebra& q,
                                                      const AlgebraElement& x,
                                                      double tol = kDefaultTolerance);

struct IdempotentImage {
  std::size_t character;  // row in the parent character table
  AlgebraElement image;   // e * epsilon_chi in the parent algebra
  bool is_zero;
};

std::vector<IdempotentImage> quotient_idempotent_images(const StructureConstantTable& t,
                                                        const ClosedSubset& c,
                                                        const IdempotentSet& idems,
                                                        double tol = kDefaultTolerance);

struct MultiplicityMatch {
  std::size_t parent_character;
  std::size_t quotient_character;
  Scalar parent_zeta;
  Scalar quotient_zeta;
};

struct PreservationReport {
  /// Every nonvanishing image matched a quotient idempotent and the two
  /// multiplicities agree.
  bool holds = false;
  std::vector<MultiplicityMatch> matches;
  std::size_t nonzero_images = 0;
  std::size_t quotient_rank = 0;
};

/// Builds both character tables, maps each nonzero e*epsilon_chi into the
/// quotient basis, matches it with a central primitive idempotent of the
/// quotient and compares multiplicities.
PreservationReport quotient_multiplicity_preservation(const StructureConstantTable& t,
                                                      const ClosedSubset& c,
                                                      const CharacterOptions& opts = {});

}  // namespace closed
}  // namespace tabalg

#endif  // TABALG_CLOSED_HPP
