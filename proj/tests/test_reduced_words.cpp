#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rwg/reduced_words.hpp"

using rwg::Permutation;
using rwg::Word;

TEST(ReducedWords, ApplyWord) {
  EXPECT_EQ(rwg::apply_word(rwg::parse_word("12321"), 4), Permutation::parse("4231"));
  EXPECT_EQ(rwg::apply_word({}, 3), Permutation::identity(3));
  EXPECT_THROW(rwg::apply_word({4}, 4), rwg::Error);
  EXPECT_TRUE(rwg::is_reduced(rwg::parse_word("121"), 3));
  EXPECT_FALSE(rwg::is_reduced(rwg::parse_word("11"), 3));
}

TEST(ReducedWords, FormatAndParse) {
  EXPECT_EQ(rwg::format_word({}), "e");
  EXPECT_EQ(rwg::format_word({1, 2, 1}), "121");
  EXPECT_EQ(rwg::format_word({10, 2}), "10,2");
  EXPECT_EQ(rwg::parse_word("10,2"), (Word{10, 2}));
  EXPECT_EQ(rwg::parse_word("e"), Word{});
  EXPECT_THROW(rwg::parse_word("1x"), rwg::Error);
}

TEST(ReducedWords, SmallExamples) {
  const auto r = rwg::enumerate(Permutation::parse("321"));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(rwg::format_word(r[0]), "121");
  EXPECT_EQ(rwg::format_word(r[1]), "212");
  EXPECT_EQ(rwg::enumerate(Permutation::identity(4)), std::vector<Word>{Word{}});
  EXPECT_EQ(rwg::enumerate(Permutation::parse("3241")).size(), 3u);
  EXPECT_EQ(rwg::count_reduced_words(Permutation::decreasing(5)), 768u);
  EXPECT_EQ(rwg::count_reduced_words(Permutation::decreasing(6)), 292864u);
}

TEST(ReducedWords, MatchesExhaustiveSearch) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : oracle::all_of_size(n)) {
      const auto got = rwg::enumerate(pi);
      const auto want = oracle::reduced_words_exhaustive(pi);
      ASSERT_EQ(std::set<Word>(got.begin(), got.end()), want) << pi.to_string();
    }
}

TEST(ReducedWords, MatchesDescentRecursion) {
  for (int n = 5; n <= 6; ++n)
    for (const auto& pi : oracle::all_of_size(n)) {
      if (rwg::count_reduced_words(pi) > 20000) continue;
      const auto got = rwg::enumerate(pi);
      const auto want = oracle::reduced_words_recursive({pi.entries().begin(), pi.entries().end()});
      ASSERT_EQ(std::vector<Word>(want.begin(), want.end()), got) << pi.to_string();
    }
}

TEST(ReducedWords, OutputIsSortedAndReduced) {
  for (const auto& pi : oracle::all_of_size(5)) {
    const auto words = rwg::enumerate(pi);
    ASSERT_TRUE(std::is_sorted(words.begin(), words.end()));
    ASSERT_EQ(words.size(), rwg::count_reduced_words(pi));
    for (const auto& w : words) {
      ASSERT_EQ(static_cast<int>(w.size()), pi.length());
      ASSERT_EQ(rwg::apply_word(w, 5), pi);
    }
  }
}

TEST(ReducedWords, CapIsEnforcedBeforeGeneration) {
  try {
    rwg::enumerate(Permutation::decreasing(6), 1000);
    FAIL() << "expected TooLarge";
  } catch (const rwg::Error& e) {
    EXPECT_EQ(e.code(), rwg::ErrorCode::TooLarge);
  }
}
