#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rwg/error.hpp"
#include "rwg/permutation.hpp"

namespace rwg {

/// Sequence of simple-reflection indices i (s_i swaps positions i and i+1).
using Word = std::vector<std::uint8_t>;

inline constexpr std::size_t kDefaultWordCap = 500'000;

/// Digits when every letter is a single digit, comma-separated otherwise;
/// the empty word is written "e".
inline std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  bool compact = true;
  for (auto c : w) compact = compact && c <= 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  Word w;
  if (text.empty() || text == "e") return w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad word text '" + std::string(text) + "'");
      w.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto field = text.substr(pos, next - pos);
    if (field.empty() || field.size() > 3) throw Error(ErrorCode::Parse, "bad word letter '" + std::string(field) + "'");
    int v = 0;
    for (char c : field) {
      if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad word letter '" + std::string(field) + "'");
      v = v * 10 + (c - '0');
    }
    if (v > 255) throw Error(ErrorCode::Parse, "word letter " + std::to_string(v) + " too large");
    w.push_back(static_cast<std::uint8_t>(v));
    pos = next + 1;
  }
  return w;
}

/// Start from the identity of size n and swap positions i_1, then i_2, ...
inline Permutation apply_word(const Word& word, int n) {
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i + 1;
  for (auto letter : word) {
    if (letter < 1 || letter >= n)
      throw Error(ErrorCode::LetterOutOfRange,
                  "letter " + std::to_string(letter) + " is outside 1.." + std::to_string(n - 1));
    std::swap(entries[letter - 1u], entries[letter]);
  }
  return Permutation::from_one_line(std::move(entries));
}

inline bool is_reduced(const Word& word, int n) {
  return static_cast<int>(word.size()) == apply_word(word, n).length();
}

namespace detail {

inline Permutation swap_values(const Permutation& pi, int value) {
  std::vector<int> entries(pi.entries().begin(), pi.entries().end());
  for (auto& v : entries) {
    if (v == value)
      v = value + 1;
    else if (v == value + 1)
      v = value;
  }
  return Permutation::from_one_line(std::move(entries));
}

// Value i+1 sits left of value i: prepending the letter i keeps the word reduced.
inline std::vector<int> left_descents(const Permutation& pi) {
  std::vector<int> pos(static_cast<std::size_t>(pi.size()) + 1);
  for (int i = 1; i <= pi.size(); ++i) pos[static_cast<std::size_t>(pi(i))] = i;
  std::vector<int> out;
  for (int v = 1; v < pi.size(); ++v)
    if (pos[static_cast<std::size_t>(v) + 1] < pos[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

inline std::uint64_t count_words(const Permutation& pi, std::unordered_map<Permutation, std::uint64_t>& memo) {
  if (pi.is_identity()) return 1;
  if (auto it = memo.find(pi); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int v : left_descents(pi)) {
    const auto sub = count_words(swap_values(pi, v), memo);
    total = sub > std::numeric_limits<std::uint64_t>::max() - total ? std::numeric_limits<std::uint64_t>::max()
                                                                     : total + sub;
  }
  memo.emplace(pi, total);
  return total;
}

inline void enumerate_words(const Permutation& pi, Word& prefix, std::vector<Word>& out) {
  if (pi.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int v : left_descents(pi)) {
    prefix.push_back(static_cast<std::uint8_t>(v));
    enumerate_words(swap_values(pi, v), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// |R(pi)|, saturating at the largest uint64.
inline std::uint64_t count_reduced_words(const Permutation& pi) {
  std::unordered_map<Permutation, std::uint64_t> memo;
  return detail::count_words(pi, memo);
}

/// R(pi) in lexicographic order. The size is checked against `cap` before any
/// word is materialized.
inline std::vector<Word> enumerate(const Permutation& pi, std::size_t cap = kDefaultWordCap) {
  const auto count = count_reduced_words(pi);
  if (count > cap)
    throw Error(ErrorCode::TooLarge, "|R(" + pi.to_string() + ")| = " + std::to_string(count) + " exceeds the cap of " +
                                         std::to_string(cap));
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  Word prefix;
  detail::enumerate_words(pi, prefix, out);
  return out;
}

}  // namespace rwg
