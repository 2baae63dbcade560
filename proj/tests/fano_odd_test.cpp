#include <gtest/gtest.h>

#include <map>

#include "fanohodge/curves.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/fano_odd.hpp"
#include "fanohodge/hodge_diamond.hpp"
#include "oracles.hpp"

namespace fanohodge {
namespace {

TEST(OddFanoParams, Validation) {
  EXPECT_NO_THROW(OddFanoParams(2, 0));
  EXPECT_THROW(OddFanoParams(1, 0), PreconditionError);
  EXPECT_THROW(OddFanoParams(4, 3), PreconditionError);
  EXPECT_THROW(OddFanoParams(4, -1), PreconditionError);
  EXPECT_EQ(OddFanoParams(4, 1).dimension(), 10);
  EXPECT_EQ(OddFanoParams(2, 0).dimension(), 3);
}

TEST(CvxMultiplicity, Examples) {
  EXPECT_EQ(cvx_multiplicity(2, 2, 3), 1);
  EXPECT_EQ(cvx_multiplicity(2, 2, 0), 0);
  EXPECT_EQ(cvx_kernel(2, 2), testing::ones({-3, -1, 1, 3}));
  EXPECT_EQ(cvx_kernel(2, 1), LaurentPoly(1));
  for (int c = -6; c <= 6; ++c) {
    EXPECT_EQ(cvx_multiplicity(2, 1, c), c == 0 ? 1 : 0) << c;
    const bool odd_in_range = c % 2 != 0 && c >= -5 && c <= 5;
    EXPECT_EQ(cvx_multiplicity(3, 3, c), odd_in_range ? 1 : 0) << c;
  }
}

TEST(CvxMultiplicity, Preconditions) {
  EXPECT_THROW(cvx_kernel(1, 3), PreconditionError);
  EXPECT_THROW(cvx_kernel(4, 2), PreconditionError);
}

TEST(CvxMultiplicity, SymmetricEffectiveAndParity) {
  for (int a = 2; a <= 9; ++a) {
    for (int b = a - 1; b <= a + 6; ++b) {
      const LaurentPoly& n = cvx_kernel(a, b);
      ASSERT_TRUE(is_effective(n)) << a << ' ' << b;
      ASSERT_EQ(n, n.inverted()) << a << ' ' << b;
      // Every exponent has the parity of (b - a + 1)(2a - 1).
      const int parity = ((b - a + 1) * (2 * a - 1)) % 2;
      for (const auto& [e, c] : n.terms()) ASSERT_EQ(((e % 2) + 2) % 2, parity) << a << ' ' << b << ' ' << e;
    }
  }
}

TEST(FanoOdd, LowestCaseMatchesHyperbolicReduction) {
  const HodgeDiamond f = fano_odd_diamond(OddFanoParams(2, 0));
  ASSERT_EQ(f.dimension(), 3);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      Integer expected = p == q ? 1 : 0;
      if ((p == 2 && q == 1) || (p == 1 && q == 2)) expected = 2;
      EXPECT_EQ(f(p, q), expected) << p << ' ' << q;
    }
  }
  EXPECT_EQ(euler(f), 0);
}

TEST(FanoOdd, KZeroMatchesOracle) {
  for (int g = 2; g <= 12; ++g) {
    const HodgeDiamond f = fano_odd_diamond(OddFanoParams(g, 0));
    ASSERT_EQ(e_polynomial(f), testing::lemma_k0_oracle(g)) << g;
  }
}

TEST(FanoOdd, GenusFourPlanesReferenceTable) {
  const HodgeDiamond f = fano_odd_diamond(OddFanoParams(4, 1));
  ASSERT_EQ(f.dimension(), 10);
  // Hodge numbers on or next to the middle axis; every other entry vanishes.
  std::map<std::pair<int, int>, int> nonzero = {
      {{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 2}, {{3, 2}, 4}, {{3, 3}, 2}, {{4, 3}, 4},
      {{4, 4}, 3}, {{5, 4}, 4}, {{5, 5}, 18}, {{6, 4}, 6},
  };
  auto expected = [&](int p, int q) -> Integer {
    if (p < q) std::swap(p, q);
    if (p + q > 10) {
      const int pp = 10 - q;
      const int qq = 10 - p;
      p = pp;
      q = qq;
    }
    const auto it = nonzero.find({p, q});
    return it == nonzero.end() ? 0 : it->second;
  };
  for (int p = 0; p <= 10; ++p) {
    for (int q = 0; q <= 10; ++q) EXPECT_EQ(f(p, q), expected(p, q)) << p << ' ' << q;
  }
  const std::vector<int> b = {1, 0, 1, 0, 2, 8, 2, 8, 3, 8, 30, 8, 3, 8, 2, 8, 2, 0, 1, 0, 1};
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(betti(f, m), b[m]) << m;
  EXPECT_EQ(euler(f), 0);
}

TEST(FanoOdd, StructuralInvariants) {
  for (int g = 2; g <= 10; ++g) {
    for (int k = 0; k <= g - 2; ++k) {
      const HodgeDiamond f = fano_odd_diamond(OddFanoParams(g, k));
      ASSERT_EQ(f.dimension(), (k + 1) * (2 * g - 2 * k - 1));
      ASSERT_EQ(f(0, 0), 1);
      ASSERT_EQ(betti(f, 1), 0);
      ASSERT_EQ(betti(f, 2), 1) << g << ' ' << k;
    }
  }
}

}  // namespace
}  // namespace fanohodge
