#include <gtest/gtest.h>

#include <fstream>

#include "fixtures.hpp"
#include "tabalg/chartab.hpp"
#include "tabalg/errors.hpp"
#include "tabalg/scheme.hpp"

using namespace tabalg;

namespace {

void expect_matches_brute_force(const SchemeRelations& s) {
  auto alg = scheme::scheme_to_algebra(s);
  auto p = fixtures::brute_force_intersections(s);
  const std::size_t r = s.rank();
  ASSERT_EQ(alg.table.rank(), r);
  for (std::size_t g = 0; g < r; ++g)
    for (std::size_t h = 0; h < r; ++h)
      for (std::size_t k = 0; k < r; ++k) EXPECT_EQ(alg.table.lambda(g, h, k), Scalar(p[g][h][k]));
  EXPECT_TRUE(validate(alg.table).ok());
  EXPECT_TRUE(is_integral(alg.table));
}

}  // namespace

TEST(SchemeIo, ParsesPetersenFile) {
  std::ifstream in(fixtures::data_path("petersen.scheme"));
  ASSERT_TRUE(in);
  auto s = scheme::read_scheme(in);
  EXPECT_EQ(s.n, 10u);
  EXPECT_EQ(s.relmat, fixtures::petersen().relmat);
  EXPECT_EQ(scheme::parse_scheme(scheme::write_scheme(s)).relmat, s.relmat);
}

TEST(SchemeIo, Errors) {
  EXPECT_THROW(scheme::parse_scheme("points 2\n"), ParseError);
  EXPECT_THROW(scheme::parse_scheme("scheme 1\npoints 2\n0 1\n"), ParseError);
  EXPECT_THROW(scheme::parse_scheme("scheme 1\npoints 2\n0 1\n1\n"), ParseError);
  EXPECT_THROW(scheme::parse_scheme("scheme 1\npoints 2\n0 1\n1 x\n"), ParseError);
  try {
    scheme::parse_scheme("scheme 1\npoints 2\n0 1\n1 0 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(SchemeToAlgebra, StructureConstantsAreIntersectionNumbers) {
  expect_matches_brute_force(fixtures::petersen());
  expect_matches_brute_force(fixtures::pentagon());
  expect_matches_brute_force(fixtures::complete_graph(3));
  expect_matches_brute_force(fixtures::complete_graph(1));
  expect_matches_brute_force(fixtures::s3_thin());
}

TEST(SchemeToAlgebra, CompleteGraphOnThreePoints) {
  auto t = scheme::scheme_to_algebra(fixtures::complete_graph(3)).table;
  EXPECT_EQ(t.lambda(1, 1, 0), Scalar(2));
  EXPECT_EQ(t.lambda(1, 1, 1), Scalar(1));
  auto ct = chartab::character_table(t).table;
  EXPECT_EQ(ct.zeta, (std::vector<Scalar>{1, 2}));
}

TEST(SchemeToAlgebra, PetersenMultiplicitiesMatchSpectrum) {
  auto s = fixtures::petersen();
  auto t = scheme::scheme_to_algebra(s).table;
  EXPECT_EQ(t.degree(1), Scalar(3));
  EXPECT_EQ(t.degree(2), Scalar(6));
  // oracle: eigenvalue multiplicities of the adjacency matrix of relation 1
  auto spectrum = fixtures::adjacency_spectrum(s, 1);
  auto ct = chartab::character_table(t).table;
  ASSERT_EQ(spectrum.size(), ct.size());
  for (auto [value, count] : spectrum) {
    bool found = false;
    for (std::size_t chi = 0; chi < ct.size(); ++chi) {
      if (std::abs(ct.values[chi][1].real() - value) < 1e-6) {
        EXPECT_EQ(ct.zeta[chi], Scalar(count));
        found = true;
      }
    }
    EXPECT_TRUE(found) << value;
  }
}

TEST(SchemeToAlgebra, StandardTraceIsAffordedCharacter) {
  for (const auto& s : {fixtures::petersen(), fixtures::pentagon(), fixtures::s3_thin(),
                        fixtures::complete_graph(4)}) {
    auto alg = scheme::scheme_to_algebra(s);
    auto ct = chartab::character_table(alg.table).table;
    EXPECT_TRUE(chartab::check_standard_condition(ct).in_standard_class);
    // sum_chi zeta_chi chi(1) = n and tr sigma_g = sum_chi zeta_chi chi(g)
    Scalar total = 0;
    for (std::size_t chi = 0; chi < ct.size(); ++chi) total += ct.zeta[chi] * ct.degrees[chi];
    EXPECT_TRUE(near(total, Scalar(static_cast<long>(s.n)), 1e-9));
    for (std::size_t g = 0; g < alg.table.rank(); ++g) {
      Scalar sum = 0;
      for (std::size_t chi = 0; chi < ct.size(); ++chi) sum += ct.zeta[chi] * ct.values[chi][g];
      EXPECT_TRUE(near(sum, alg.adjacency.matrices[g].trace(), 1e-9));
    }
  }
}

TEST(SchemeCheck, DetectsViolations) {
  auto s = fixtures::petersen();
  s.relmat[0][1] = 1;  // breaks transpose closure
  auto check = scheme::check_scheme(s);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.witness.empty());
  EXPECT_THROW(scheme::scheme_to_algebra(s), NotAScheme);

  auto diag = fixtures::pentagon();
  diag.relmat[2][2] = 1;
  EXPECT_FALSE(scheme::check_scheme(diag).ok);

  // symmetric but not regular: path on 3 points with distance relations
  SchemeRelations path{3, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}};
  auto p = scheme::check_scheme(path);
  EXPECT_FALSE(p.ok);
  EXPECT_EQ(p.witness.size(), 4u);

  SchemeRelations gap{2, {{0, 2}, {2, 0}}};
  EXPECT_FALSE(scheme::check_scheme(gap).ok);

  EXPECT_THROW(scheme::check_scheme(fixtures::complete_graph(5), 4), DomainError);
}

TEST(AdjacencyImage, NativeRepresentationPasses) {
  for (const auto& s : {fixtures::petersen(), fixtures::pentagon(), fixtures::s3_thin(),
                        fixtures::complete_graph(1)}) {
    auto alg = scheme::scheme_to_algebra(s);
    auto v = scheme::verify_adjacency_image(alg.table, alg.adjacency);
    EXPECT_TRUE(v.affords_zeta && v.transpose_ok && v.zero_one_ok && v.disjoint_ok &&
                v.sum_is_J && v.row_sums_ok && v.is_adjacency_image);
    auto h = scheme::hadamard_preservation_check(alg.table, alg.adjacency);
    EXPECT_TRUE(h.preserves);
    EXPECT_TRUE(h.tau_identity_holds);
  }
}

TEST(AdjacencyImage, PerturbationIsCaught) {
  auto alg = scheme::scheme_to_algebra(fixtures::petersen());
  auto rep = alg.adjacency;
  rep.matrices[1](0, 7) = 0;  // flip a 1 to 0
  EXPECT_FALSE(scheme::is_homomorphism(alg.table, rep));
  EXPECT_THROW(scheme::verify_adjacency_image(alg.table, rep), StructuralError);
}

TEST(AdjacencyImage, NonZeroOneRepresentation) {
  // Regular representation of the involution algebra conjugated by a
  // non-permutation matrix: a homomorphism affording zeta that is not 0-1.
  auto t = fixtures::involution();
  MatrixRepresentation d{2, {Matrix::identity(2), Matrix(2, 2)}};
  d.matrices[1](0, 0) = 0;
  d.matrices[1](0, 1) = 2;
  d.matrices[1](1, 0) = Scalar::fraction(1, 2);
  d.matrices[1](1, 1) = 0;
  auto v = scheme::verify_adjacency_image(t, d);
  EXPECT_TRUE(v.affords_zeta);
  EXPECT_FALSE(v.zero_one_ok);
  EXPECT_FALSE(v.transpose_ok);
  EXPECT_FALSE(v.is_adjacency_image);
  EXPECT_FALSE(scheme::hadamard_preservation_check(t, d).preserves);
}

TEST(AdjacencyImage, NotInStandardClassIsRefused) {
  auto t = fixtures::integral_nonstandard();
  MatrixRepresentation d{28, std::vector<Matrix>(3, Matrix(28, 28))};
  EXPECT_THROW(scheme::hadamard_preservation_check(t, d), NotInStandardClass);
}

TEST(Faithfulness, DeterminantNonzero) {
  for (const auto& t : {fixtures::integral_nonstandard(), scheme::affine_plane_algebra(3),
                        fixtures::rank_one()}) {
    EXPECT_TRUE(scheme::faithfulness_check(t, chartab::character_table(t).table));
  }
  auto s3 = fixtures::symmetric_group_s3();
  EXPECT_THROW(scheme::faithfulness_check(s3, chartab::character_table(s3).table), Unsupported);
}

TEST(AffinePlane, Structure) {
  auto t = scheme::affine_plane_algebra(2);
  EXPECT_EQ(t.rank(), 4u);
  EXPECT_EQ(t.lambda(1, 1, 0), Scalar(1));
  EXPECT_TRUE(t.lambda(1, 1, 1).is_zero());
  EXPECT_EQ(t.lambda(1, 2, 3), Scalar(1));
  EXPECT_EQ(scheme::affine_plane_algebra(4).b_plus(), Scalar(16));
  EXPECT_THROW(scheme::affine_plane_algebra(1), DomainError);
  for (long q = 2; q <= 7; ++q) EXPECT_TRUE(validate(scheme::affine_plane_algebra(q)).ok());
}

TEST(Srg, Examples) {
  auto petersen = scheme::srg_algebra(10, 3, 0, 1);
  EXPECT_TRUE(petersen.integrality_ok && petersen.standard_ok && petersen.agree);
  EXPECT_EQ(petersen.zeta, (std::vector<Scalar>{1, 4, 5}));

  auto pentagon = scheme::srg_algebra(5, 2, 0, 1);
  EXPECT_TRUE(pentagon.integrality_ok && pentagon.standard_ok && pentagon.agree);
  EXPECT_TRUE(near(pentagon.zeta[1], Scalar(2), 1e-9));

  auto nonintegral = scheme::srg_algebra(7, 3, 0, 2);
  EXPECT_FALSE(nonintegral.integrality_ok);
  EXPECT_FALSE(nonintegral.standard_ok);
  EXPECT_TRUE(nonintegral.agree);

  EXPECT_FALSE(scheme::is_admissible_srg(8, 3, 0, 1));
  EXPECT_THROW(scheme::srg_algebra(8, 3, 0, 1), DomainError);
}

TEST(Srg, TableMatchesPetersenScheme) {
  auto from_params = scheme::srg_table(10, 3, 0, 1);
  auto from_scheme = scheme::scheme_to_algebra(fixtures::petersen()).table;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        EXPECT_EQ(from_params.lambda(a, b, c), from_scheme.lambda(a, b, c));
}

TEST(Srg, IntegerOracleAgreesWithFloatingFormula) {
  int checked = 0;
  for (long n = 4; n <= 50; ++n)
    for (long k = 1; k <= n - 2; ++k)
      for (long l = 0; l < k; ++l)
        for (long m = 0; m <= k; ++m) {
          if (!scheme::is_admissible_srg(n, k, l, m)) continue;
          auto [f, g] = fixtures::srg_multiplicities(n, k, l, m);
          bool integral = std::abs(f - std::round(f)) < 1e-7 && std::abs(g - std::round(g)) < 1e-7 &&
                          std::round(f) > 0 && std::round(g) > 0;
          EXPECT_EQ(scheme::srg_multiplicities_integral(n, k, l, m), integral)
              << n << " " << k << " " << l << " " << m;
          ++checked;
        }
  EXPECT_EQ(checked, 1836);
}
