#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "fixtures.hpp"
#include "tabalg/chartab.hpp"
#include "tabalg/errors.hpp"
#include "tabalg/scheme.hpp"

using namespace tabalg;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(CharacterTable, IntegralNonstandardExample) {
  auto t = fixtures::integral_nonstandard();
  auto data = chartab::character_table(t);
  const auto& ct = data.table;
  ASSERT_EQ(ct.size(), 3u);
  EXPECT_TRUE(ct.exact);
  EXPECT_EQ(ct.values[0], ints({1, 2, 25}));
  EXPECT_EQ(ct.values[1], ints({1, 2, -3}));
  EXPECT_EQ(ct.values[2], ints({1, -1, 0}));
  EXPECT_EQ(ct.zeta[0], Scalar(1));
  EXPECT_EQ(ct.zeta[1], Scalar::fraction(25, 3));
  EXPECT_EQ(ct.zeta[2], Scalar::fraction(56, 3));
  auto verdict = chartab::check_standard_condition(ct);
  EXPECT_FALSE(verdict.in_standard_class);
  ASSERT_EQ(verdict.offending.size(), 2u);
  EXPECT_EQ(verdict.offending[0].first, 1u);
}

TEST(CharacterTable, ExactOrthogonality) {
  auto t = fixtures::integral_nonstandard();
  auto ct = chartab::character_table(t).table;
  auto r = chartab::orthogonality_residual(ct, t);
  EXPECT_TRUE(r.has_columns);
  EXPECT_TRUE(r.vanishes(0.0));
  EXPECT_EQ(r.max_abs(), 0.0);
}

TEST(CharacterTable, AffinePlanePattern) {
  for (long q : {2, 3, 4, 5}) {
    auto t = scheme::affine_plane_algebra(q);
    auto ct = chartab::character_table(t).table;
    const std::size_t n = static_cast<std::size_t>(q + 2);
    ASSERT_EQ(ct.size(), n);
    EXPECT_TRUE(ct.exact);
    // oracle: row i >= 1 has q-1 at column i and -1 at every other nonidentity column
    for (std::size_t b = 0; b < n; ++b) EXPECT_EQ(ct.values[0][b], Scalar(b == 0 ? 1 : q - 1));
    EXPECT_EQ(ct.zeta[0], Scalar(1));
    for (std::size_t chi = 1; chi < n; ++chi) {
      for (std::size_t b = 0; b < n; ++b) {
        long expect = b == 0 ? 1 : (b == chi ? q - 1 : -1);
        EXPECT_EQ(ct.values[chi][b], Scalar(expect)) << "q=" << q;
      }
      EXPECT_EQ(ct.zeta[chi], Scalar(q - 1));
    }
    EXPECT_TRUE(chartab::check_standard_condition(ct).in_standard_class);
    EXPECT_TRUE(chartab::orthogonality_residual(ct, t).vanishes(0.0));
  }
}

TEST(CharacterTable, TrivialAlgebras) {
  auto one = chartab::character_table(fixtures::rank_one()).table;
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.values[0], ints({1}));
  EXPECT_EQ(one.zeta[0], Scalar(1));

  auto two = chartab::character_table(fixtures::involution()).table;
  EXPECT_EQ(two.values[0], ints({1, 1}));
  EXPECT_EQ(two.values[1], ints({1, -1}));
  EXPECT_EQ(two.zeta, ints({1, 1}));
}

TEST(CharacterTable, ComplexCharactersOfCyclicGroup) {
  auto t = fixtures::cyclic_group(3);
  auto ct = chartab::character_table(t).table;
  EXPECT_FALSE(ct.exact);
  ASSERT_EQ(ct.size(), 3u);
  for (std::size_t chi = 0; chi < 3; ++chi) {
    Complex w = ct.values[chi][1].complex();
    EXPECT_NEAR(std::abs(w), 1.0, 1e-9);
    EXPECT_NEAR(std::abs(w * w * w - 1.0), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(ct.values[chi][2].complex() - w * w), 0.0, 1e-9);
    EXPECT_TRUE(near(ct.zeta[chi], Scalar(1), 1e-9));
  }
  EXPECT_TRUE(chartab::orthogonality_residual(ct, t).vanishes(1e-9));
  EXPECT_THROW(chartab::character_table(t, {kDefaultTolerance, 1, true}), ExactnessError);
}

TEST(CharacterTable, IrrationalPentagon) {
  auto t = scheme::scheme_to_algebra(fixtures::pentagon()).table;
  auto ct = chartab::character_table(t).table;
  EXPECT_FALSE(ct.exact);
  const double golden = (std::sqrt(5.0) - 1) / 2;
  // oracle: eigenvalues of the 5-cycle are 2, (-1 +- sqrt 5)/2
  EXPECT_NEAR(ct.values[1][1].real(), golden, 1e-9);
  EXPECT_NEAR(ct.values[2][1].real(), -1 - golden, 1e-9);
  auto z = chartab::sorted_zeta(ct);
  EXPECT_TRUE(near(z[0], Scalar(1), 1e-9));
  EXPECT_TRUE(near(z[1], Scalar(2), 1e-9));
  EXPECT_TRUE(near(z[2], Scalar(2), 1e-9));
  EXPECT_TRUE(chartab::check_standard_condition(ct).in_standard_class);
  EXPECT_LT(chartab::orthogonality_residual(ct, t).max_abs(), 1e-9);
}

TEST(CharacterTable, NoncommutativeGroupAlgebra) {
  auto t = fixtures::symmetric_group_s3();
  EXPECT_EQ(chartab::center_basis(t).size(), 3u);
  auto data = chartab::character_table(t);
  const auto& ct = data.table;
  EXPECT_FALSE(ct.commutative);
  ASSERT_EQ(ct.size(), 3u);
  EXPECT_TRUE(ct.exact);
  EXPECT_EQ(ct.degrees, ints({1, 2, 1}));
  // group algebra: zeta_chi = chi(1)
  EXPECT_EQ(ct.zeta, ct.degrees);
  // oracle: chi(g) = number of fixed points - 1 for the 2-dimensional character
  const auto elements = std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (std::size_t g = 0; g < 6; ++g) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += elements[g][i] == i;
    EXPECT_EQ(ct.values[1][g], Scalar(fixed - 1));
  }
  EXPECT_TRUE(chartab::reconstructs_standard_trace(ct, t, 0));
  EXPECT_TRUE(chartab::idempotent_axioms_hold(t, data.idempotents, 0));
  EXPECT_TRUE(chartab::orthogonality_residual(ct, t).vanishes(0));
  EXPECT_FALSE(chartab::orthogonality_residual(ct, t).has_columns);
  EXPECT_TRUE(chartab::check_standard_condition(ct).in_standard_class);
  for (std::size_t chi = 0; chi < 3; ++chi) {
    EXPECT_TRUE(near(chartab::idempotent_from_character(ct, chi, t),
                     data.idempotents.idempotents[chi], 0));
  }
}

TEST(CharacterTable, IdempotentsMatchClosedForm) {
  for (const auto& [name, t] : fixtures::commutative_zoo()) {
    auto data = chartab::character_table(t);
    for (std::size_t chi = 0; chi < data.table.size(); ++chi) {
      EXPECT_TRUE(near(chartab::idempotent_from_character(data.table, chi, t),
                       data.idempotents.idempotents[chi], 1e-9))
          << name << " row " << chi;
    }
    EXPECT_TRUE(chartab::idempotent_axioms_hold(t, data.idempotents, 1e-9)) << name;
    EXPECT_TRUE(chartab::reconstructs_standard_trace(data.table, t, 1e-9)) << name;
    EXPECT_TRUE(chartab::multiplicity_bound_check(data.table)) << name;
    EXPECT_TRUE(chartab::character_value_bound_check(data.table, t)) << name;
  }
}

TEST(CharacterTable, DeterministicForSeed) {
  auto t = scheme::scheme_to_algebra(fixtures::pentagon()).table;
  auto a = chartab::character_table(t, {kDefaultTolerance, 7, false}).table;
  auto b = chartab::character_table(t, {kDefaultTolerance, 7, false}).table;
  for (std::size_t chi = 0; chi < a.size(); ++chi)
    for (std::size_t g = 0; g < a.values[chi].size(); ++g)
      EXPECT_EQ(a.values[chi][g].str(), b.values[chi][g].str());
  auto exact1 = chartab::character_table(fixtures::integral_nonstandard(), {1e-9, 1, false}).table;
  auto exact2 = chartab::character_table(fixtures::integral_nonstandard(), {1e-9, 99, false}).table;
  EXPECT_EQ(exact1.values, exact2.values);
}

TEST(CharacterTable, RejectsNonAlgebra) {
  TableBuilder b(2);  // g^2 = 1 + g with degree 1 violates the degree map
  b.identity_products().degree(1, 1).set(1, 1, 0, 1).set(1, 1, 1, 1);
  EXPECT_THROW(chartab::character_table(b.build()), IntegrityError);
}

TEST(Isomorphism, RelabelAndScale) {
  auto t = scheme::affine_plane_algebra(3);
  std::vector<BasisIndex> perm{0, 3, 1, 4, 2};
  auto r = relabel(t, perm);
  EXPECT_TRUE(chartab::isomorphism_check(t, r, chartab::BasisMap::permutation(perm)));
  std::vector<BasisIndex> wrong{0, 1, 2, 3, 4};
  EXPECT_TRUE(chartab::isomorphism_check(t, r, chartab::BasisMap::permutation(wrong)));
  auto n = fixtures::integral_nonstandard();
  auto swapped = chartab::BasisMap::permutation({0, 2, 1});
  EXPECT_FALSE(chartab::isomorphism_check(n, n, swapped));
  auto scaled = chartab::BasisMap::permutation({0, 1, 2});
  scaled.scale[1] = 2;
  EXPECT_FALSE(chartab::isomorphism_check(n, n, scaled));
  EXPECT_THROW(chartab::isomorphism_check(n, n, chartab::BasisMap::permutation({0, 1, 1})),
               StructuralError);
  EXPECT_TRUE(chartab::multiset_zeta_equal(chartab::character_table(t).table,
                                           chartab::character_table(r).table));
}
