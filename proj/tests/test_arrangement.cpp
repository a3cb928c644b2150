#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rwg/arrangement.hpp"

using rwg::BoundClass;
using rwg::Permutation;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(Arrangement, L2Example) {
  EXPECT_EQ(rwg::l2(P("4312")), (rwg::L2Breakdown{2, 2, 4}));
  EXPECT_EQ(rwg::l2(P("4231")).l2, 4);
  EXPECT_EQ(rwg::l2(Permutation::identity(5)).l2, 0);
}

TEST(Arrangement, L2MatchesFlatCount) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : oracle::all_of_size(n)) ASSERT_EQ(rwg::l2(pi).l2, oracle::l2_from_flats(pi));
}

TEST(Arrangement, BoundClassUsesIntegerComparisons) {
  EXPECT_EQ(rwg::bound_class(4, 4), BoundClass::AtUpper);
  EXPECT_EQ(rwg::bound_class(2, 4), BoundClass::AtLower);
  EXPECT_EQ(rwg::bound_class(3, 4), BoundClass::Interior);
  EXPECT_EQ(rwg::bound_class(1, 4), BoundClass::BelowLower);
  EXPECT_EQ(rwg::bound_class(5, 4), BoundClass::AboveUpper);
  EXPECT_EQ(rwg::bound_class(2, 5), BoundClass::BelowLower);
  EXPECT_EQ(rwg::bound_class(3, 5), BoundClass::Interior);
  EXPECT_EQ(rwg::bound_class(0, 0), BoundClass::AtUpper);
}

TEST(Arrangement, Classify) {
  const auto r = rwg::classify(P("4231"), 4);
  EXPECT_EQ(r.bound_class, BoundClass::AtUpper);
  EXPECT_EQ(rwg::classify(P("3412"), 1).bound_class, BoundClass::AtLower);
  const auto c = rwg::check_2413();
  EXPECT_EQ(c.bound_class, BoundClass::AtUpper);
  EXPECT_EQ(c.diam_g, 1);
  EXPECT_EQ(c.l2.l2, 1);
  EXPECT_FALSE(rwg::upper_families(P("2413")).any());
  EXPECT_TRUE(rwg::upper_families(P("4231")).twentyone_single);
  EXPECT_TRUE(rwg::upper_families(P("4321")).avoids_312);
}

TEST(Arrangement, DiameterTripleMatchesOracle) {
  for (const auto& pi : oracle::all_of_size(5)) ASSERT_EQ(rwg::diameter_triple(pi), oracle::diameters(pi));
}

TEST(Arrangement, SweepReportsSkips) {
  rwg::DiameterOptions options;
  options.vertex_cap = 10;
  const auto reports = rwg::sweep(4, options);
  ASSERT_EQ(reports.size(), 24u);
  const auto summary = rwg::summarize(reports);
  EXPECT_EQ(summary.covered + summary.skipped.size(), 24u);
  EXPECT_FALSE(summary.skipped.empty());
  for (const auto& r : reports) {
    if (rwg::count_reduced_words(r.pi) > 10) {
      EXPECT_EQ(r.bound_class, BoundClass::Skipped);
      EXPECT_FALSE(r.diam_g.has_value());
      EXPECT_FALSE(r.skip_reason.empty());
    } else {
      EXPECT_TRUE(r.diam_g.has_value());
    }
  }
  EXPECT_THROW(rwg::sweep(0), rwg::Error);
}

TEST(Arrangement, SweepS4) {
  const auto reports = rwg::sweep(4);
  for (std::size_t i = 1; i < reports.size(); ++i) ASSERT_LT(reports[i - 1].pi, reports[i].pi);
  const auto s = rwg::summarize(reports);
  EXPECT_EQ(s.covered, 24u);
  ASSERT_EQ(s.at_lower.size(), 1u);
  EXPECT_EQ(s.at_lower[0], P("3412"));
  EXPECT_TRUE(s.bound_violations.empty());
  EXPECT_TRUE(s.containment_violations.empty());
}

TEST(Arrangement, AvoidersReachUpperBound) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : oracle::all_of_size(n)) {
      if (rwg::avoids(pi, P("312")) || rwg::avoids(pi, P("231"))) {
        ASSERT_EQ(rwg::classify(pi, oracle::diameters(pi).g).bound_class, BoundClass::AtUpper) << pi.to_string();
      }
    }
}
