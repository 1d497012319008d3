#ifndef TABALG_SCHEME_HPP
#define TABALG_SCHEME_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tabalg/chartab.hpp"
#include "tabalg/matrix.hpp"
#include "tabalg/table.hpp"

namespace tabalg {

/// An association scheme on n points given by its relation-index matrix;
/// relation 0 is the diagonal.
struct SchemeRelations {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> relmat;

  /// Number of relations, max index + 1.
  std::size_t rank() const;
};

/// m x m matrices D(b), one per basis index.
struct MatrixRepresentation {
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
};

struct SchemeAlgebra {
  StructureConstantTable table;
  /// The adjacency matrices sigma_g.
  MatrixRepresentation adjacency;
};

namespace scheme {

inline constexpr std::size_t kDefaultPointGuard = 200;

/// Text format: `scheme 1`, `points <n>`, then n rows of n relation indices.
/// Blank lines and `#` comments are ignored. Throws ParseError.
SchemeRelations read_scheme(std::istream& in);
SchemeRelations parse_scheme(const std::string& text);
std::string write_scheme(const SchemeRelations& s);

struct SchemeCheck {
  bool ok = false;
  std::string reason;
  /// Points (x, y) or (x, y, x', y') witnessing the failure.
  std::vector<std::size_t> witness;
};

/// Checks the diagonal, transpose closure and that the intersection counts
/// depend only on the relation of the endpoints. Throws DomainError when n
/// exceeds point_guard.
SchemeCheck check_scheme(const SchemeRelations& s,
                         std::size_t point_guard = kDefaultPointGuard);

/// Intersection numbers as structure constants, valencies as degrees.
/// Throws NotAScheme when check_scheme fails.
SchemeAlgebra scheme_to_algebra(const SchemeRelations& s,
                                std::size_t point_guard = kDefaultPointGuard);

/// D(1) = I and D(a) D(b) = sum_c lambda(a, b, c) D(c).
bool is_homomorphism(const StructureConstantTable& t, const MatrixRepresentation& d,
                     double tol = kDefaultTolerance);

struct AdjacencyVerdict {
  bool affords_zeta = false;
  bool transpose_ok = false;
  bool zero_one_ok = false;
  bool disjoint_ok = false;
  bool sum_is_J = false;
  /// Row and column sums of D(b) all equal |b|.
  bool row_sums_ok = false;
  bool is_adjacency_image = false;
};

/// Decides whether D exhibits the table algebra as the adjacency algebra of
/// a scheme: D affords zeta, D(b*) = D(b)^T, every D(b) is 0-1, the D(b) have
/// disjoint supports summing to J. Throws StructuralError if D is not a
/// representation of t.
AdjacencyVerdict verify_adjacency_image(const StructureConstantTable& t,
                                        const MatrixRepresentation& d,
                                        double tol = kDefaultTolerance);

struct HadamardReport {
  /// D(b) o D(c) = delta(b, c) D(b) for all basis pairs.
  bool preserves = false;
  /// sum of entries of D(b*) o D(c)^T equals tr(D(b*) D(c)) for all pairs.
  bool tau_identity_holds = false;
};

/// Throws NotInStandardClass if t is outside the standard class and
/// StructuralError if D does not afford zeta.
HadamardReport hadamard_preservation_check(const StructureConstantTable& t,
                                           const MatrixRepresentation& d,
                                           const CharacterOptions& opts = {});

/// det(diag(zeta) P) != 0. Throws Unsupported for noncommutative tables.
bool faithfulness_check(const StructureConstantTable& t, const CharacterTable& ct,
                        double tol = kDefaultTolerance);

/// Rank q+2 algebra r_i r_i = (q-1) 1 + (q-2) r_i, r_i r_j = sum of the other
/// r_k. Throws DomainError for q < 2.
StructureConstantTable affine_plane_algebra(long q);

/// Parameters that give a rank-3 symmetric table algebra with nonnegative
/// structure constants.
bool is_admissible_srg(long n, long k, long lambda, long mu);

/// Classical feasibility test: both eigenvalue multiplicities are positive
/// integers. Exact integer arithmetic only.
bool srg_multiplicities_integral(long n, long k, long lambda, long mu);

struct SrgResult {
  StructureConstantTable table;
  bool integrality_ok = false;
  bool standard_ok = false;
  bool agree = false;
  std::vector<Scalar> zeta;
};

/// Rank-3 algebra with basis 1, g, h and degrees k, n-k-1. Throws DomainError
/// for inadmissible parameters.
StructureConstantTable srg_table(long n, long k, long lambda, long mu);

SrgResult srg_algebra(long n, long k, long lambda, long mu, const CharacterOptions& opts = {});

}  // namespace scheme
}  // namespace tabalg

#endif  // TABALG_SCHEME_HPP
