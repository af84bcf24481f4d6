#include <gtest/gtest.h>

#include "mcs/linalg.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace mcs;

namespace {

std::vector<std::vector<mpz_class>> dense(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j);
  return a;
}

} // namespace

TEST(Smith, DiagonalExample) {
  auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.invariants, (std::vector<mpz_class>{2, 6, 12}));
  EXPECT_EQ(s.U * m * s.V, s.D);
}

TEST(Smith, RankDeficient) {
  auto m = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_EQ(s.invariants[0], 1);
}

TEST(Smith, ZeroAndEmpty) {
  EXPECT_EQ(smith_normal_form(IntMatrix(3, 2)).rank(), 0u);
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 3)).rank(), 0u);
}

TEST(Smith, MatchesDeterminantalOracleOnRectangles) {
  for (auto [r, c] : {std::pair{2u, 5u}, {5u, 2u}, {3u, 3u}}) {
    auto out = props::snf_contract(40, 17 + r, r, c);
    EXPECT_TRUE(out.ok()) << out.first_failure;
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  auto m = IntMatrix::from_rows({{3, 1, 4, 1}, {5, 9, 2, 6}, {5, 3, 5, 8}, {9, 7, 9, 3}}, 4);
  EXPECT_EQ(determinant(m), oracle::cofactor_det(dense(m)));
}

TEST(Unimodular, InverseRoundTrips) {
  auto m = IntMatrix::from_rows({{2, 3}, {1, 2}}, 2);
  EXPECT_EQ(m * unimodular_inverse(m), IntMatrix::identity(2));
  EXPECT_ANY_THROW(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)));
}

TEST(Kernel, BasisIsAnnihilatedAndSaturated) {
  auto m = IntMatrix::from_rows({{1, 1, 1}}, 3);
  auto k = integer_kernel(m);
  ASSERT_EQ(k.size(), 2u);
  IntMatrix b(3, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    mpz_class dot = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      dot += k[j][i];
      b(i, j) = k[j][i];
    }
    EXPECT_EQ(dot, 0);
  }
  auto s = smith_normal_form(b);
  EXPECT_EQ(s.invariants, (std::vector<mpz_class>{1, 1}));
}

TEST(Rank, OverQ) {
  EXPECT_EQ(rational_rank(IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 0}}, 2)), 1u);
  EXPECT_EQ(rational_rank(IntMatrix::identity(4)), 4u);
}

TEST(SolveLeft, RecoversCoefficients) {
  auto b = IntMatrix::from_rows({{1, 1}, {1, -1}}, 2);
  auto x = solve_left(b, {3, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_left(IntMatrix::from_rows({{1, 2}, {2, 4}}, 2), {1, 1}));
}

TEST(PositiveFunctional, AgreesWithFourierMotzkin) {
  using V = std::vector<std::vector<mpq_class>>;
  std::vector<V> cases = {
      {{1, 0}, {0, 1}},
      {{1, 0}, {-1, 0}},
      {{1, 1}, {1, -1}, {-1, 0}},
      {{1, 2, 0}, {0, 1, 1}, {1, 0, 3}},
      {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}},
  };
  for (const auto& vs : cases) {
    std::size_t d = vs[0].size();
    auto w = minimal_positive_functional(vs, d);
    EXPECT_EQ(w.has_value(), oracle::fm_strictly_positive_functional_exists(vs, d));
    if (w)
      for (const auto& v : vs) {
        mpq_class dot = 0;
        for (std::size_t i = 0; i < d; ++i)
          dot += (*w)[i] * v[i];
        EXPECT_GE(dot, 1);
      }
  }
}

TEST(Primitive, ScalesToCoprimeIntegers) {
  auto v = primitive_integer_multiple({mpq_class(2, 3), mpq_class(-4, 9), mpq_class(0)});
  EXPECT_EQ(v, (std::vector<mpz_class>{3, -2, 0}));
}
