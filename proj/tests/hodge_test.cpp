#include <gtest/gtest.h>

#include "fanohodge/curves.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/hodge_diamond.hpp"
#include "oracles.hpp"

namespace fanohodge {
namespace {

using Rows = std::vector<std::vector<Integer>>;

TEST(HodgeDiamond, PointAndProjectiveSpace) {
  const HodgeDiamond pt = HodgeDiamond::point();
  EXPECT_EQ(pt.dimension(), 0);
  EXPECT_EQ(e_polynomial(pt), BiPoly(1));
  const HodgeDiamond p3 = projective_space_diamond(3);
  EXPECT_EQ(euler(p3), 4);
  EXPECT_TRUE(is_hodge_tate(p3));
  EXPECT_EQ(poincare_polynomial(p3), testing::ones({0, 2, 4, 6}));
}

TEST(HodgeDiamond, RejectsAsymmetricOrNegativeTables) {
  EXPECT_THROW(HodgeDiamond(1, Rows{{1, 2}, {1, 1}}), DomainError);
  EXPECT_THROW(HodgeDiamond(1, Rows{{1, 0}, {0, 2}}), DomainError);
  EXPECT_THROW(HodgeDiamond(1, Rows{{1, -1}, {-1, 1}}), DomainError);
  EXPECT_THROW(HodgeDiamond(1, Rows{{1, 0}}), DomainError);
  EXPECT_THROW(HodgeDiamond(-1, Rows{}), DomainError);
  EXPECT_NO_THROW(HodgeDiamond(1, Rows{{1, 3}, {3, 1}}));
}

TEST(HodgeDiamond, OutOfRangeEntriesAreZero) {
  const HodgeDiamond c = curve_diamond(2);
  EXPECT_EQ(c(-1, 0), 0);
  EXPECT_EQ(c(2, 0), 0);
  EXPECT_EQ(c(1, 0), 2);
}

TEST(HodgeDiamond, BettiRange) {
  const HodgeDiamond c = curve_diamond(3);
  EXPECT_EQ(betti(c, 0), 1);
  EXPECT_EQ(betti(c, 1), 6);
  EXPECT_EQ(betti(c, 2), 1);
  EXPECT_THROW(betti(c, 3), RangeError);
  EXPECT_THROW(betti(c, -1), RangeError);
}

TEST(HodgeDiamond, EPolynomialOfACurve) {
  EXPECT_EQ(e_polynomial(curve_diamond(2)),
            (BiPoly{{{0, 0}, Integer(1)}, {{1, 0}, Integer(-2)}, {{0, 1}, Integer(-2)}, {{1, 1}, Integer(1)}}));
}

TEST(HodgeDiamond, HochschildOfACurve) {
  // HH_{-1} = h^{1,0}, HH_0 = h^{0,0} + h^{1,1}, HH_1 = h^{0,1}.
  EXPECT_EQ(hochschild_polynomial(curve_diamond(3)),
            (LaurentPoly{{-1, Integer(3)}, {0, Integer(2)}, {1, Integer(3)}}));
}

TEST(HodgeDiamond, KunnethMultipliesEPolynomials) {
  const std::vector<HodgeDiamond> samples = {curve_diamond(0), curve_diamond(2), sym_curve_diamond(3, 2),
                                             projective_space_diamond(2), jacobian_diamond(2)};
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      const HodgeDiamond ab = kunneth_product(a, b);
      ASSERT_EQ(ab.dimension(), a.dimension() + b.dimension());
      ASSERT_EQ(e_polynomial(ab), e_polynomial(a) * e_polynomial(b));
      ASSERT_EQ(euler(ab), euler(a) * euler(b));
    }
  }
}

TEST(HodgeDiamond, EulerIsEAtOneOne) {
  for (int g = 0; g <= 6; ++g) {
    for (int n = 0; n <= 6; ++n) {
      const HodgeDiamond d = sym_curve_diamond(g, n);
      ASSERT_EQ(euler(d), evaluate(e_polynomial(d), 1, 1));
      ASSERT_EQ(euler(d), evaluate(hochschild_polynomial(d), Integer(-1)));
    }
  }
}

TEST(HodgeDiamond, RenderText) {
  EXPECT_EQ(render_text(curve_diamond(2)), "  1\n2   2\n  1\n");
  EXPECT_EQ(render_text(HodgeDiamond::point()), "1\n");
}

TEST(HodgeDiamond, FromFunctionValidates) {
  EXPECT_THROW(HodgeDiamond::from_function(2, [](int p, int) { return Integer(p); }), DomainError);
}

}  // namespace
}  // namespace fanohodge
