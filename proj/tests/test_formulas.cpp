#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rwg/formulas.hpp"
#include "rwg/inflation_expr.hpp"

using rwg::DiameterTriple;
using rwg::Permutation;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST(Formulas, DeltaRecursion) {
  EXPECT_EQ(rwg::delta_recursion(1), (DiameterTriple{0, 0, 0}));
  EXPECT_EQ(rwg::delta_recursion(2), (DiameterTriple{0, 0, 0}));
  EXPECT_EQ(rwg::delta_recursion(3), (DiameterTriple{1, 1, 0}));
  EXPECT_EQ(rwg::delta_recursion(4), (DiameterTriple{7, 4, 3}));
  EXPECT_EQ(rwg::delta_recursion(5), (DiameterTriple{25, 10, 15}));
  EXPECT_EQ(rwg::delta_recursion(6), (DiameterTriple{65, 20, 45}));
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(rwg::delta_recursion(n), oracle::diameters(Permutation::decreasing(n)));
  EXPECT_THROW(rwg::delta_recursion(0), rwg::Error);
}

TEST(Formulas, TwelveInflation) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& pi : oracle::all_of_size(n))
      for (const auto& [alpha, beta] : rwg::splits_12(pi)) {
        const auto got = rwg::diam_12(oracle::diameters(alpha), oracle::diameters(beta), alpha.length(), beta.length());
        ASSERT_EQ(got, oracle::diameters(pi)) << pi.to_string();
      }
}

TEST(Formulas, TwentyOneWithSingleton) {
  for (int a = 1; a <= 4; ++a)
    for (const auto& alpha : oracle::all_of_size(a)) {
      const auto pi = rwg::inflate_21(alpha, P("1"));
      ASSERT_EQ(rwg::diam_21_single(oracle::diameters(alpha), alpha.length(), a), oracle::diameters(pi))
          << pi.to_string();
    }
}

TEST(Formulas, TwentyOneWithIdentityBounds) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 5; ++b)
      for (const auto& alpha : oracle::all_of_size(a)) {
        const auto pi = rwg::inflate_21(alpha, Permutation::identity(b));
        const auto bounds = rwg::bounds_21_iota(oracle::diameters(alpha), alpha.length(), a, b);
        ASSERT_TRUE(bounds.contains(oracle::diameters(pi))) << pi.to_string();
      }
  EXPECT_THROW(rwg::bounds_21_iota({}, 0, 0, 1), rwg::Error);
}

TEST(Formulas, BoundsCollapseForSingleton) {
  const DiameterTriple d{7, 4, 3};
  const auto bounds = rwg::bounds_21_iota(d, 6, 4, 1);
  const auto exact = rwg::diam_21_single(d, 6, 4);
  EXPECT_EQ(bounds.g_lower, exact.g);
  EXPECT_EQ(bounds.g_upper, exact.g);
  EXPECT_EQ(bounds.c, exact.c);
  EXPECT_EQ(bounds.b_lower, exact.b);
}

TEST(Formulas, AvoiderRecursions) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : oracle::all_of_size(n)) {
      if (rwg::avoids(pi, P("312"))) {
        ASSERT_EQ(rwg::diam_312_avoiding(pi), oracle::diameters(pi)) << pi.to_string();
      }
      if (rwg::avoids(pi, P("231"))) {
        ASSERT_EQ(rwg::diam_231_avoiding(pi), oracle::diameters(pi)) << pi.to_string();
      }
    }
  EXPECT_THROW(rwg::diam_312_avoiding(P("312")), rwg::Error);
  EXPECT_THROW(rwg::diam_231_avoiding(P("231")), rwg::Error);
}

TEST(Formulas, LowFamily) {
  for (int a = 2; a <= 3; ++a)
    for (int b = 2; b <= 3; ++b)
      for (int c = 0; a + b + c <= 6; ++c)
        for (int d = 0; a + b + c + d <= 6; ++d) {
          const auto pi = rwg::inflate(P("123"), {Permutation::identity(c),
                                                  rwg::inflate_21(Permutation::identity(a), Permutation::identity(b)),
                                                  Permutation::identity(d)});
          ASSERT_EQ(rwg::diam_low_family(a, b, c, d), oracle::diameters(pi).g) << pi.to_string();
          const auto f = rwg::match_low_family(pi);
          ASSERT_TRUE(f.has_value());
          ASSERT_EQ(f->a, a);
          ASSERT_EQ(f->d, d);
          ASSERT_EQ(rwg::parse_inflation(rwg::to_expression(*f)), pi);
        }
  EXPECT_FALSE(rwg::match_low_family(P("2413")).has_value());
  EXPECT_FALSE(rwg::match_low_family(P("231")).has_value());
  EXPECT_THROW(rwg::diam_low_family(1, 2, 0, 0), rwg::Error);
}

TEST(Formulas, Expressions) {
  EXPECT_EQ(rwg::to_expression({2, 2, 1, 1}), "12[12[i1,21[i2,i2]],i1]");
  EXPECT_EQ(rwg::to_expression({3, 2, 0, 0}), "21[i3,i2]");
  EXPECT_EQ(rwg::parse_inflation("12[i2,21[i2,i2]]"), P("125634"));
  EXPECT_EQ(rwg::parse_inflation("21[d3,1]"), P("4321"));
  EXPECT_EQ(rwg::parse_inflation("2413"), P("2413"));
  EXPECT_EQ(rwg::parse_inflation("12[e,21]"), P("21"));
  EXPECT_THROW(rwg::parse_inflation("21[i3,i3]]"), rwg::Error);
  EXPECT_THROW(rwg::parse_inflation("21[i3"), rwg::Error);
  EXPECT_THROW(rwg::parse_inflation("x"), rwg::Error);
}
