#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rwg/error.hpp"
#include "rwg/formulas.hpp"
#include "rwg/permutation.hpp"
#include "rwg/reduced_words.hpp"
#include "rwg/word_graph.hpp"

namespace rwg {

struct L2Breakdown {
  long long i2 = 0;  // unordered pairs of inversions with no index in common
  long long i3 = 0;  // 321 patterns
  long long l2 = 0;
  friend bool operator==(const L2Breakdown&, const L2Breakdown&) = default;
};

inline L2Breakdown l2(const Permutation& pi) {
  const auto inv = inversions(pi);
  L2Breakdown out;
  for (std::size_t x = 0; x < inv.size(); ++x)
    for (std::size_t y = x + 1; y < inv.size(); ++y) {
      const auto& p = inv[x];
      const auto& q = inv[y];
      if (p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j) ++out.i2;
    }
  out.i3 = count_321(pi);
  out.l2 = out.i2 + out.i3;
  return out;
}

/// Position of diam(G) relative to l2/2 <= diam <= l2.
enum class BoundClass { BelowLower, AtLower, Interior, AtUpper, AboveUpper, Skipped };

constexpr std::string_view to_string(BoundClass c) {
  switch (c) {
    case BoundClass::BelowLower: return "BelowLower";
    case BoundClass::AtLower: return "AtLower";
    case BoundClass::Interior: return "Interior";
    case BoundClass::AtUpper: return "AtUpper";
    case BoundClass::AboveUpper: return "AboveUpper";
    case BoundClass::Skipped: return "Skipped";
  }
  return "Unknown";
}

struct ConjectureReport {
  Permutation pi;
  std::optional<long long> diam_g;  // empty when skipped
  L2Breakdown l2;
  BoundClass bound_class = BoundClass::Skipped;
  std::string skip_reason;
};

/// Integer comparison only. Equality with the upper bound is checked first,
/// so l2 = 0 (the identity) is AtUpper.
inline BoundClass bound_class(long long diam, long long l2_size) {
  if (diam == l2_size) return BoundClass::AtUpper;
  if (2 * diam == l2_size) return BoundClass::AtLower;
  if (2 * diam < l2_size) return BoundClass::BelowLower;
  if (diam > l2_size) return BoundClass::AboveUpper;
  return BoundClass::Interior;
}

inline ConjectureReport classify(const Permutation& pi, long long diam_g) {
  ConjectureReport r{pi, diam_g, l2(pi), BoundClass::Skipped, {}};
  r.bound_class = bound_class(diam_g, r.l2.l2);
  return r;
}

/// Brute-force diam(G_pi), using the word symmetries that fix pi.
inline std::uint32_t word_graph_diameter(const Permutation& pi, const DiameterOptions& options = {}) {
  const auto count = count_reduced_words(pi);
  if (count > options.vertex_cap)
    throw Error(ErrorCode::TooLarge, "|R(" + pi.to_string() + ")| = " + std::to_string(count) +
                                         " exceeds the vertex cap of " + std::to_string(options.vertex_cap));
  const auto g = build_word_graph(pi, std::max<std::size_t>(options.vertex_cap, kDefaultWordCap));
  const auto maps = word_automorphisms(pi, g);
  return diameter(g, options, maps);
}

/// Brute-force diameters of G_pi, C_pi and B_pi.
inline DiameterTriple diameter_triple(const Permutation& pi, const DiameterOptions& options = {}) {
  const auto count = count_reduced_words(pi);
  if (count > options.vertex_cap)
    throw Error(ErrorCode::TooLarge, "|R(" + pi.to_string() + ")| = " + std::to_string(count) +
                                         " exceeds the vertex cap of " + std::to_string(options.vertex_cap));
  const auto g = build_word_graph(pi, std::max<std::size_t>(options.vertex_cap, kDefaultWordCap));
  const auto maps = word_automorphisms(pi, g);
  DiameterTriple d;
  d.g = diameter(g, options, maps);
  for (auto kind : {EdgeKind::Commutation, EdgeKind::LongBraid}) {
    const auto q = contract(g, kind);
    const auto induced = induced_automorphisms(class_ids(g, q), maps);
    (kind == EdgeKind::Commutation ? d.c : d.b) = diameter(q, options, induced);
  }
  return d;
}

/// Report for pi, or Skipped when |R(pi)| is above the cap.
inline ConjectureReport report_for(const Permutation& pi, const DiameterOptions& options) {
  const auto count = count_reduced_words(pi);
  if (count > options.vertex_cap) {
    ConjectureReport r{pi, std::nullopt, l2(pi), BoundClass::Skipped, {}};
    r.skip_reason =
        "|R| = " + std::to_string(count) + " exceeds the vertex cap of " + std::to_string(options.vertex_cap);
    return r;
  }
  DiameterOptions single = options;
  single.threads = 1;
  return classify(pi, word_graph_diameter(pi, single));
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_one_line(entries));
  while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

/// One report per pi in S_n, in lexicographic order. Permutations run in
/// parallel over `options.threads` workers.
inline std::vector<ConjectureReport> sweep(int n, const DiameterOptions& options = {}) {
  if (n < 1) throw Error(ErrorCode::Precondition, "sweep needs n >= 1");
  const auto perms = all_permutations(n);
  std::vector<ConjectureReport> out(perms.size());
  // largest graphs first keeps the workers balanced
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  for (std::size_t i = 0; i < perms.size(); ++i) order.emplace_back(count_reduced_words(perms[i]), i);
  std::sort(order.rbegin(), order.rend());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto k = next++; k < order.size(); k = next++) out[order[k].second] = report_for(perms[order[k].second], options);
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

struct SweepSummary {
  std::vector<Permutation> at_lower;
  std::vector<Permutation> at_upper;
  std::vector<Permutation> bound_violations;  // BelowLower or AboveUpper
  std::vector<Permutation> containment_violations;  // contains 3412 yet diam = l2 or more
  std::vector<Permutation> skipped;
  std::size_t covered = 0;
};

/// Tallies a sweep. Containment violations are reported, not asserted: the
/// statement that 3412-containing permutations stay strictly below l2 is open.
inline SweepSummary summarize(const std::vector<ConjectureReport>& reports) {
  SweepSummary s;
  const auto p3412 = Permutation::parse("3412");
  for (const auto& r : reports) {
    if (r.bound_class == BoundClass::Skipped) {
      s.skipped.push_back(r.pi);
      continue;
    }
    ++s.covered;
    if (r.bound_class == BoundClass::AtLower) s.at_lower.push_back(r.pi);
    if (r.bound_class == BoundClass::AtUpper) s.at_upper.push_back(r.pi);
    if (r.bound_class == BoundClass::BelowLower || r.bound_class == BoundClass::AboveUpper)
      s.bound_violations.push_back(r.pi);
    if ((r.bound_class == BoundClass::AtUpper || r.bound_class == BoundClass::AboveUpper) &&
        contains_pattern(r.pi, p3412))
      s.containment_violations.push_back(r.pi);
  }
  return s;
}

/// Which of the known upper-bound families pi belongs to.
struct UpperFamilies {
  bool twelve_inflation = false;  // 12[alpha, beta] with both factors at the upper bound
  bool twentyone_single = false;  // 21[alpha, 1] with alpha at the upper bound
  bool avoids_231 = false;
  bool avoids_312 = false;

  bool any() const { return twelve_inflation || twentyone_single || avoids_231 || avoids_312; }
};

inline UpperFamilies upper_families(const Permutation& pi, const DiameterOptions& options = {}) {
  UpperFamilies f;
  auto at_upper = [&](const Permutation& p) { return classify(p, word_graph_diameter(p, options)).bound_class == BoundClass::AtUpper; };
  for (const auto& [alpha, beta] : splits_12(pi))
    if (at_upper(alpha) && at_upper(beta)) f.twelve_inflation = true;
  if (pi.size() >= 2 && pi(pi.size()) == 1) {
    const auto parts = splits_21(pi);
    for (const auto& [alpha, beta] : parts)
      if (beta.size() == 1 && at_upper(alpha)) f.twentyone_single = true;
  }
  f.avoids_231 = avoids(pi, Permutation::parse("231"));
  f.avoids_312 = avoids(pi, Permutation::parse("312"));
  return f;
}

/// 2413 reaches diam = l2 without belonging to any of the known families.
inline ConjectureReport check_2413() {
  const auto pi = Permutation::parse("2413");
  return classify(pi, word_graph_diameter(pi));
}

}  // namespace rwg
