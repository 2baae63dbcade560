#include <gtest/gtest.h>

#include "fanohodge/binomial.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/fano_even.hpp"
#include "fanohodge/hodge_diamond.hpp"

namespace fanohodge {
namespace {

TEST(EvenFanoParams, Validation) {
  EXPECT_THROW(EvenFanoParams(1, 0), PreconditionError);
  EXPECT_THROW(EvenFanoParams(3, 2), PreconditionError);
  EXPECT_EQ(EvenFanoParams(2, 0).dimension(), 2);
  EXPECT_EQ(EvenFanoParams(3, 1).dimension(), 4);
}

TEST(FanoEven, BettiExamples) {
  const EvenFanoParams dp4(2, 0);
  EXPECT_EQ(fano_even_betti(dp4, 0), 1);
  EXPECT_EQ(fano_even_betti(dp4, 1), 6);
  EXPECT_EQ(fano_even_betti(dp4, 2), 1);
  EXPECT_EQ(fano_even_betti(dp4, 3), 0);
  EXPECT_EQ(fano_even_betti(dp4, -1), 0);
}

TEST(FanoEven, DelPezzoOfDegreeFour) {
  const HodgeDiamond d = fano_even_diamond(EvenFanoParams(2, 0));
  EXPECT_EQ(d, HodgeDiamond(2, {{1, 0, 0}, {0, 6, 0}, {0, 0, 1}}));
  EXPECT_EQ(euler(d), 8);
}

TEST(FanoEven, Examples) {
  EXPECT_EQ(euler(fano_even_diamond(EvenFanoParams(3, 1))), 48);
  EXPECT_EQ(betti(fano_even_diamond(EvenFanoParams(3, 0)), 2), 1);
  EXPECT_EQ(euler_closed_form(2, 0), 8);
  EXPECT_EQ(euler_closed_form(3, 1), 48);
  for (int g = 2; g <= 12; ++g) {
    Integer four_to_g;
    mpz_ui_pow_ui(four_to_g.get_mpz_t(), 4, g);
    EXPECT_EQ(euler_closed_form(g, g - 1), four_to_g);
  }
  EXPECT_THROW(euler_closed_form(3, 3), PreconditionError);
}

TEST(FanoEven, StructuralInvariants) {
  for (int g = 2; g <= 14; ++g) {
    for (int k = 0; k <= g - 2; ++k) {
      const EvenFanoParams params(g, k);
      const HodgeDiamond d = fano_even_diamond(params);
      const int dim = params.dimension();
      ASSERT_EQ(d.dimension(), dim);
      ASSERT_TRUE(is_hodge_tate(d));
      ASSERT_EQ(d(0, 0), 1);
      for (int m = 1; m <= 2 * dim; m += 2) ASSERT_EQ(betti(d, m), 0);
      for (int p = 0; p <= dim; ++p) ASSERT_EQ(fano_even_betti(params, p), fano_even_betti(params, dim - p));
      if (k <= g - 3) {
        ASSERT_EQ(betti(d, 2), 1) << g << ' ' << k;
      }
      ASSERT_EQ(euler(d), euler_closed_form(params)) << g << ' ' << k;
      const LaurentPoly hh = hochschild_polynomial(d);
      ASSERT_EQ(hh, LaurentPoly(euler(d)));
    }
  }
}

}  // namespace
}  // namespace fanohodge
