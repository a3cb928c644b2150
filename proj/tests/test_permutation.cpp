#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "oracles.hpp"
#include "rwg/permutation.hpp"

using rwg::Permutation;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

// pattern containment by trying every subset of positions
bool contains_by_subsets(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  const int k = sigma.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> picked;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) picked.push_back(pi(i + 1));
    if (rwg::standardize(picked) == sigma) return true;
  }
  return false;
}

}  // namespace

TEST(Permutation, ParsesOneLineText) {
  const auto p = P("4231");
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p(1), 4);
  EXPECT_EQ(p(4), 1);
  EXPECT_EQ(p.to_string(), "4231");
  EXPECT_EQ(Permutation::parse("1,3,2"), P("132"));
  EXPECT_TRUE(P("e").empty());
  EXPECT_EQ(Permutation::parse("10,9,8,7,6,5,4,3,2,1").to_string(), "10,9,8,7,6,5,4,3,2,1");
}

TEST(Permutation, RejectsBadInput) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const rwg::Error& e) {
      return e.code();
    }
    return rwg::ErrorCode::Precondition;
  };
  EXPECT_EQ(code([] { Permutation::from_one_line({1, 2, 2}); }), rwg::ErrorCode::DuplicateEntry);
  EXPECT_EQ(code([] { Permutation::from_one_line({0, 1}); }), rwg::ErrorCode::EntryOutOfRange);
  EXPECT_EQ(code([] { Permutation::from_one_line({1, 4, 2}); }), rwg::ErrorCode::EntryOutOfRange);
  EXPECT_EQ(code([] { P("12a"); }), rwg::ErrorCode::Parse);
  EXPECT_EQ(code([] { P("1,,2"); }), rwg::ErrorCode::Parse);
}

TEST(Permutation, InversionsAndLength) {
  const auto inv = rwg::inversions(P("4312"));
  EXPECT_EQ(inv.size(), 5u);
  EXPECT_EQ(P("4312").length(), 5);
  EXPECT_EQ(Permutation::decreasing(6).length(), 15);
  EXPECT_EQ(Permutation::identity(5).length(), 0);
  for (const auto& e : inv) EXPECT_GT(P("4312")(e.i), P("4312")(e.j));
}

TEST(Permutation, Count321) {
  EXPECT_EQ(rwg::count_321(P("4312")), 2);
  EXPECT_EQ(rwg::count_321(Permutation::decreasing(5)), 10);
  EXPECT_EQ(rwg::count_321(P("2413")), 0);
}

TEST(Permutation, ContainmentMatchesSubsetSearch) {
  const std::vector<Permutation> patterns = {P("12"), P("21"), P("312"), P("231"), P("321"), P("3412"), P("2413")};
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : oracle::all_of_size(n))
      for (const auto& sigma : patterns) ASSERT_EQ(rwg::contains_pattern(pi, sigma), contains_by_subsets(pi, sigma));
}

TEST(Permutation, Inflation) {
  EXPECT_EQ(rwg::inflate_12(P("2143"), P("312")), P("2143756"));
  EXPECT_EQ(rwg::inflate_21(P("21"), P("123")), P("54123"));
  EXPECT_EQ(rwg::inflate(P("21"), {Permutation::identity(2), Permutation::identity(2)}), P("3412"));
  EXPECT_EQ(rwg::inflate(P("12"), {Permutation{}, P("21")}), P("21"));
  EXPECT_EQ(rwg::inflate(P("132"), {P("1"), P("21"), P("1")}), P("1432"));
  EXPECT_THROW(rwg::inflate(P("12"), {P("1")}), rwg::Error);
}

TEST(Permutation, SplitsRoundTrip) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& pi : oracle::all_of_size(n)) {
      for (const auto& [a, b] : rwg::splits_12(pi)) ASSERT_EQ(rwg::inflate_12(a, b), pi);
      for (const auto& [a, b] : rwg::splits_21(pi)) ASSERT_EQ(rwg::inflate_21(a, b), pi);
    }
  EXPECT_EQ(rwg::splits_12(P("2143756")).size(), 2u);
}

TEST(Permutation, DecompositionsRebuildThePermutation) {
  const auto one = P("1");
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : oracle::all_of_size(n)) {
      if (rwg::avoids(pi, P("312"))) {
        const auto d = rwg::decompose_312(pi);
        ASSERT_EQ(pi(d.m), 1);
        ASSERT_EQ(rwg::inflate(P("12"), {rwg::inflate(P("21"), {d.left, one}), d.right}), pi);
      } else {
        ASSERT_THROW(rwg::decompose_312(pi), rwg::Error);
      }
      if (rwg::avoids(pi, P("231"))) {
        const auto d = rwg::decompose_231(pi);
        ASSERT_EQ(pi(d.m), n);
        ASSERT_EQ(rwg::inflate(P("12"), {d.left, rwg::inflate(P("21"), {one, d.right})}), pi);
      }
    }
}

TEST(Permutation, AvoiderCounts) {
  int c312 = 0;
  int c231 = 0;
  for (const auto& pi : oracle::all_of_size(6)) {
    c312 += rwg::avoids(pi, P("312"));
    c231 += rwg::avoids(pi, P("231"));
  }
  EXPECT_EQ(c312, 132);
  EXPECT_EQ(c231, 132);
}

TEST(Permutation, Symmetries) {
  using rwg::Symmetry;
  EXPECT_EQ(rwg::apply_symmetry(P("3241"), Symmetry::R180), P("4132"));
  EXPECT_EQ(rwg::apply_symmetry(P("3241"), Symmetry::R1), P("4213"));
  EXPECT_EQ(rwg::apply_symmetry(P("3241"), Symmetry::RM1), P("2431"));
  for (const auto& pi : oracle::all_of_size(5))
    for (auto op : {Symmetry::R180, Symmetry::R1, Symmetry::RM1}) {
      const auto image = rwg::apply_symmetry(pi, op);
      ASSERT_EQ(rwg::apply_symmetry(image, op), pi);
      ASSERT_EQ(image.length(), pi.length());
    }
}

TEST(Permutation, OrderComparesSizeFirst) {
  EXPECT_LT(P("21"), P("123"));
  EXPECT_LT(P("132"), P("213"));
  std::set<Permutation> s{P("21"), P("12"), P("21")};
  EXPECT_EQ(s.size(), 2u);
}
