#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwg/error.hpp"

namespace rwg {

/// A permutation of 1..n in one-line notation. The empty permutation (n = 0)
/// is a valid value and shows up as an inflation block.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `entries` is a rearrangement of 1..n.
  static Permutation from_one_line(std::vector<int> entries) {
    const auto n = static_cast<int>(entries.size());
    std::vector<bool> seen(entries.size() + 1, false);
    for (int v : entries) {
      if (v < 1 || v > n)
        throw Error(ErrorCode::EntryOutOfRange,
                    "entry " + std::to_string(v) + " is not in 1.." + std::to_string(n));
      if (seen[v]) throw Error(ErrorCode::DuplicateEntry, "entry " + std::to_string(v) + " repeats");
      seen[v] = true;
    }
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
  }

  static Permutation identity(int n) {
    Permutation p;
    p.entries_.resize(static_cast<std::size_t>(n));
    std::iota(p.entries_.begin(), p.entries_.end(), 1);
    return p;
  }

  static Permutation decreasing(int n) {
    Permutation p;
    for (int v = n; v >= 1; --v) p.entries_.push_back(v);
    return p;
  }

  /// Accepts "4231" (every entry a single digit) or "4,2,3,1". The empty
  /// string and "e" denote the empty permutation.
  static Permutation parse(std::string_view text) {
    if (text.empty() || text == "e") return Permutation{};
    std::vector<int> entries;
    if (text.find(',') == std::string_view::npos) {
      for (char c : text) {
        if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad permutation text '" + std::string(text) + "'");
        entries.push_back(c - '0');
      }
      if (entries.size() > 9)
        throw Error(ErrorCode::Parse, "permutations of size > 9 need comma-separated entries");
    } else {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        auto field = text.substr(pos, next - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
          throw Error(ErrorCode::Parse, "bad permutation entry '" + std::string(field) + "'");
        entries.push_back(v);
        pos = next + 1;
      }
    }
    return from_one_line(std::move(entries));
  }

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 1-based access: `(*this)(i)` is the entry at position i.
  int operator()(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }

  std::span<const int> entries() const noexcept { return entries_; }

  /// Number of inversions, which equals the length of every reduced word.
  int length() const noexcept {
    int count = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      for (std::size_t j = i + 1; j < entries_.size(); ++j)
        if (entries_[i] > entries_[j]) ++count;
    return count;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.entries_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
      p.entries_[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
    return p;
  }

  /// Digits when every entry fits in one digit, comma-separated otherwise.
  std::string to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// Position pair (i, j), 1-based, with i < j and pi(i) > pi(j).
struct Inversion {
  int i = 0;
  int j = 0;
  friend bool operator==(const Inversion&, const Inversion&) = default;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

inline std::vector<Inversion> inversions(const Permutation& pi) {
  std::vector<Inversion> out;
  for (int i = 1; i <= pi.size(); ++i)
    for (int j = i + 1; j <= pi.size(); ++j)
      if (pi(i) > pi(j)) out.push_back({i, j});
  return out;
}

/// The permutation order-isomorphic to `values` (distinct integers).
inline Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> entries(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    entries[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  return Permutation::from_one_line(std::move(entries));
}

namespace detail {

inline bool extend_pattern(std::span<const int> text, std::span<const int> pattern, std::size_t start,
                           std::vector<int>& chosen) {
  if (chosen.size() == pattern.size()) return true;
  const std::size_t k = chosen.size();
  if (text.size() - start < pattern.size() - k) return false;
  for (std::size_t pos = start; pos < text.size(); ++pos) {
    const int value = text[pos];
    bool consistent = true;
    for (std::size_t m = 0; m < k && consistent; ++m)
      consistent = (pattern[m] < pattern[k]) == (chosen[m] < value);
    if (!consistent) continue;
    chosen.push_back(value);
    if (extend_pattern(text, pattern, pos + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Brute-force subsequence search; fine for the sizes this library targets.
inline bool contains_pattern(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) throw Error(ErrorCode::Precondition, "pattern must be non-empty");
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(sigma.size()));
  return detail::extend_pattern(pi.entries(), sigma.entries(), 0, chosen);
}

inline bool avoids(const Permutation& pi, const Permutation& sigma) { return !contains_pattern(pi, sigma); }

inline long long count_321(const Permutation& pi) {
  long long count = 0;
  const int n = pi.size();
  for (int j = 2; j < n; ++j) {
    long long larger_before = 0;
    long long smaller_after = 0;
    for (int i = 1; i < j; ++i) larger_before += pi(i) > pi(j);
    for (int k = j + 1; k <= n; ++k) smaller_after += pi(k) < pi(j);
    count += larger_before * smaller_after;
  }
  return count;
}

/// sigma[blocks...]: entry sigma_i becomes a block order-isomorphic to blocks[i].
inline Permutation inflate(const Permutation& sigma, std::span<const Permutation> blocks) {
  if (static_cast<int>(blocks.size()) != sigma.size())
    throw Error(ErrorCode::LengthMismatch, "inflation of a size-" + std::to_string(sigma.size()) + " permutation needs " +
                                               std::to_string(sigma.size()) + " blocks, got " +
                                               std::to_string(blocks.size()));
  // offset[v] = total size of blocks whose sigma-value is below v
  std::vector<int> offset(static_cast<std::size_t>(sigma.size()) + 2, 0);
  for (int i = 1; i <= sigma.size(); ++i)
    offset[static_cast<std::size_t>(sigma(i)) + 1] = blocks[static_cast<std::size_t>(i - 1)].size();
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  std::vector<int> entries;
  for (int i = 1; i <= sigma.size(); ++i) {
    const auto& block = blocks[static_cast<std::size_t>(i - 1)];
    for (int v : block.entries()) entries.push_back(v + offset[static_cast<std::size_t>(sigma(i))]);
  }
  return Permutation::from_one_line(std::move(entries));
}

inline Permutation inflate(const Permutation& sigma, std::initializer_list<Permutation> blocks) {
  return inflate(sigma, std::span<const Permutation>(blocks.begin(), blocks.size()));
}

inline Permutation inflate_12(const Permutation& alpha, const Permutation& beta) {
  return inflate(Permutation::identity(2), {alpha, beta});
}

inline Permutation inflate_21(const Permutation& alpha, const Permutation& beta) {
  return inflate(Permutation::decreasing(2), {alpha, beta});
}

/// Result of splitting pi around a distinguished entry at position `m`.
struct Decomposition {
  Permutation left;   // order-isomorphic to pi_1 ... pi_{m-1}
  Permutation right;  // order-isomorphic to pi_{m+1} ... pi_n
  int m = 0;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

namespace detail {

inline Decomposition split_at(const Permutation& pi, int m) {
  auto e = pi.entries();
  return {standardize(e.subspan(0, static_cast<std::size_t>(m - 1))), standardize(e.subspan(static_cast<std::size_t>(m))),
          m};
}

}  // namespace detail

/// pi = 12[21[left, 1], right] with pi_m = 1.
inline Decomposition decompose_312(const Permutation& pi) {
  if (pi.empty()) throw Error(ErrorCode::Precondition, "decompose_312 needs a non-empty permutation");
  if (contains_pattern(pi, Permutation::parse("312")))
    throw Error(ErrorCode::Contains312, pi.to_string() + " contains 312");
  int m = 1;
  while (pi(m) != 1) ++m;
  return detail::split_at(pi, m);
}

/// pi = 12[left, 21[1, right]] with pi_m = n.
inline Decomposition decompose_231(const Permutation& pi) {
  if (pi.empty()) throw Error(ErrorCode::Precondition, "decompose_231 needs a non-empty permutation");
  if (contains_pattern(pi, Permutation::parse("231")))
    throw Error(ErrorCode::Contains231, pi.to_string() + " contains 231");
  int m = 1;
  while (pi(m) != pi.size()) ++m;
  return detail::split_at(pi, m);
}

enum class Symmetry { R180, R1, RM1 };

inline Permutation apply_symmetry(const Permutation& pi, Symmetry op) {
  const int n = pi.size();
  auto rotate = [&](const Permutation& p) {
    std::vector<int> entries;
    for (int i = n; i >= 1; --i) entries.push_back(n - p(i) + 1);
    return Permutation::from_one_line(std::move(entries));
  };
  switch (op) {
    case Symmetry::R180: return rotate(pi);
    case Symmetry::R1: return pi.inverse();
    case Symmetry::RM1: return rotate(pi).inverse();
  }
  return pi;
}

/// Every nontrivial way of writing pi = 12[alpha, beta] (both blocks non-empty),
/// indexed by |alpha|.
inline std::vector<std::pair<Permutation, Permutation>> splits_12(const Permutation& pi) {
  std::vector<std::pair<Permutation, Permutation>> out;
  int prefix_max = 0;
  auto e = pi.entries();
  for (int k = 1; k < pi.size(); ++k) {
    prefix_max = std::max(prefix_max, pi(k));
    if (prefix_max == k)
      out.emplace_back(standardize(e.subspan(0, static_cast<std::size_t>(k))),
                       standardize(e.subspan(static_cast<std::size_t>(k))));
  }
  return out;
}

/// Every nontrivial way of writing pi = 21[alpha, beta], indexed by |alpha|.
inline std::vector<std::pair<Permutation, Permutation>> splits_21(const Permutation& pi) {
  std::vector<std::pair<Permutation, Permutation>> out;
  int prefix_min = pi.size() + 1;
  auto e = pi.entries();
  for (int k = 1; k < pi.size(); ++k) {
    prefix_min = std::min(prefix_min, pi(k));
    if (prefix_min == pi.size() - k + 1)
      out.emplace_back(standardize(e.subspan(0, static_cast<std::size_t>(k))),
                       standardize(e.subspan(static_cast<std::size_t>(k))));
  }
  return out;
}

}  // namespace rwg

template <>
struct std::hash<rwg::Permutation> {
  std::size_t operator()(const rwg::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.entries()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
