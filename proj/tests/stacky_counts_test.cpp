#include <gtest/gtest.h>

#include "fanohodge/errors.hpp"
#include "fanohodge/fano_even.hpp"
#include "fanohodge/stacky_counts.hpp"
#include "fanohodge/suites.hpp"

namespace fanohodge {
namespace {

TEST(FonarevRank, Examples) {
  EXPECT_EQ(fonarev_rank(2, 1), 7);
  EXPECT_EQ(fonarev_rank(4, 2), 57);
  for (int g = 2; g <= 10; ++g) {
    EXPECT_EQ(fonarev_rank(g, 0), 1);
    for (int k = 1; k <= g; ++k) ASSERT_GT(fonarev_rank(g, k), fonarev_rank(g, k - 1));
  }
}

TEST(StackyLength, Examples) {
  EXPECT_EQ(stacky_rhs_length(2, 0), 8);
  EXPECT_EQ(stacky_rhs_length(3, 1), 48);
  for (int g = 2; g <= 20; ++g) {
    for (int k = 0; k <= g - 2; ++k) ASSERT_EQ(stacky_rhs_length(g, k), euler_closed_form(g, k)) << g << ' ' << k;
  }
  EXPECT_THROW(stacky_rhs_length(3, 2), PreconditionError);
}

TEST(Gessel, Examples) {
  EXPECT_TRUE(gessel_identity_check(1, 2));
  for (int a = 0; a <= 20; a += 2) EXPECT_TRUE(gessel_identity_check(0, a));
  EXPECT_TRUE(gessel_identity_check(30, 60));
  EXPECT_TRUE(gessel_series_check(30, 60));
  EXPECT_TRUE(gessel_series_check(5, 0));
  EXPECT_THROW(gessel_identity_check(1, 3), PreconditionError);
  EXPECT_THROW(gessel_identity_check(-1, 2), PreconditionError);
  EXPECT_THROW(gessel_series_check(2, -2), PreconditionError);
}

TEST(ChuVandermonde, Examples) {
  EXPECT_TRUE(chu_vandermonde_check(3, 1, 1));
  EXPECT_TRUE(chu_vandermonde_check(10, 2, 5));
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(chu_vandermonde_check(n, 0, 0));
  EXPECT_THROW(chu_vandermonde_check(3, 2, 1), PreconditionError);
  EXPECT_THROW(chu_vandermonde_check(3, 1, 4), PreconditionError);
}

TEST(Reports, StackyIdentities) {
  const VerificationReport e = verify_euler_even(3, 1);
  EXPECT_TRUE(e.verified());
  EXPECT_EQ(e.identity, "euler-even");
  EXPECT_EQ(std::get<Integer>(e.lhs), 48);
  const VerificationReport s = verify_stacky_length(2, 0);
  EXPECT_TRUE(s.verified());
  EXPECT_EQ(std::get<Integer>(s.lhs), 8);
}

TEST(Suites, AllHold) {
  for (const VerificationReport& r :
       {gessel_suite(12, 20), gessel_series_suite(12, 20), chu_vandermonde_suite(15),
        multiplicity_at_one_suite(12), q_binomial_suite(20)}) {
    EXPECT_TRUE(r.verified()) << r.identity;
    EXPECT_GT(std::get<Integer>(r.lhs), 0) << r.identity;
    EXPECT_TRUE(r.notes.empty()) << r.identity;
  }
  EXPECT_EQ(std::get<Integer>(chu_vandermonde_suite(2).lhs), 10);
}

}  // namespace
}  // namespace fanohodge
