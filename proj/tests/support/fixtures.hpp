// Test-only algebras, schemes and brute-force oracles.
#ifndef TABALG_TESTS_FIXTURES_HPP
#define TABALG_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "tabalg/scheme.hpp"
#include "tabalg/table.hpp"

namespace fixtures {

using tabalg::SchemeRelations;
using tabalg::StructureConstantTable;

std::string data_path(const std::string& name);

/// b^2 = 2 + b, c^2 = 25 + 25b + 22c, bc = cb = 2c.
StructureConstantTable integral_nonstandard();
StructureConstantTable rank_one();
/// g^2 = 1.
StructureConstantTable involution();
/// Group algebra of Z/n with b_i b_j = b_{i+j}.
StructureConstantTable cyclic_group(std::size_t n);
/// Group algebra of S3 on the permutations of {0,1,2}, identity first.
StructureConstantTable symmetric_group_s3();

/// Kneser graph K(5,2): relation 1 = disjoint pairs, 2 = meeting pairs.
SchemeRelations petersen();
/// 5-cycle: relation = cyclic distance.
SchemeRelations pentagon();
/// All distinct pairs in one relation.
SchemeRelations complete_graph(std::size_t n);
/// Thin scheme of S3: g(x, y) = index of x^{-1} y.
SchemeRelations s3_thin();

/// Intersection numbers by direct triple counting:
/// result[g][h][k] = #{z : rel(x,z) = g, rel(z,y) = h} for a fixed (x,y) in k.
std::vector<std::vector<std::vector<long>>> brute_force_intersections(const SchemeRelations& s);

/// Eigenvalue multiplicities of the 0-1 adjacency matrix of relation g,
/// rounded eigenvalue -> count, from a dense symmetric eigensolver.
std::vector<std::pair<double, int>> adjacency_spectrum(const SchemeRelations& s, std::size_t g);

/// Floating closed-form SRG multiplicities (f, g) for eigenvalues r > s.
std::pair<double, double> srg_multiplicities(long n, long k, long lambda, long mu);

/// Integral-table-algebra fixtures used by the property suites.
std::vector<std::pair<std::string, StructureConstantTable>> commutative_zoo();

}  // namespace fixtures

#endif  // TABALG_TESTS_FIXTURES_HPP
