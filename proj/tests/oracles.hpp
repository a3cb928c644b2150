#pragma once

// Slow, direct reimplementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "rwg/rwg.hpp"

namespace oracle {

using rwg::Permutation;
using rwg::Word;

/// Product of adjacent transpositions acting on positions, from the identity.
inline std::vector<int> apply(const Word& w, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  for (auto s : w) std::swap(p[s - 1u], p[s]);
  return p;
}

inline int inversion_count(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

/// R(pi) by testing every word of length inv(pi) over 1..n-1. Only for tiny n.
inline std::set<Word> reduced_words_exhaustive(const Permutation& pi) {
  const int n = pi.size();
  const std::vector<int> target(pi.entries().begin(), pi.entries().end());
  const int len = inversion_count(target);
  std::set<Word> out;
  if (n <= 1) {
    out.insert(Word{});
    return out;
  }
  Word w(static_cast<std::size_t>(len), 1);
  for (;;) {
    if (oracle::apply(w, n) == target) out.insert(w);
    int i = len - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n - 1) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

/// R(pi) by peeling the last letter: w s is reduced for pi exactly when s is a
/// position descent of pi.
inline std::set<Word> reduced_words_recursive(std::vector<int> p) {
  std::set<Word> out;
  bool sorted = true;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1]) continue;
    sorted = false;
    std::swap(p[i], p[i + 1]);
    for (auto w : reduced_words_recursive(p)) {
      w.push_back(static_cast<std::uint8_t>(i + 1));
      out.insert(std::move(w));
    }
    std::swap(p[i], p[i + 1]);
  }
  if (sorted) out.insert(Word{});
  return out;
}

enum class Move { None, Commutation, Braid };

/// Direct comparison of two words of equal length.
inline Move move_between(const Word& x, const Word& y) {
  if (x.size() != y.size()) return Move::None;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) diff.push_back(i);
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const auto i = diff[0];
    if (x[i] == y[i + 1] && x[i + 1] == y[i] && (x[i] > x[i + 1] + 1 || x[i + 1] > x[i] + 1)) return Move::Commutation;
  }
  if (diff.size() == 3 && diff[2] == diff[0] + 2) {
    const auto i = diff[0];
    const int a = x[i];
    const int b = x[i + 1];
    if (x[i + 2] == a && (a - b == 1 || b - a == 1) && y[i] == b && y[i + 1] == a && y[i + 2] == b)
      return Move::Braid;
  }
  return Move::None;
}

struct SimpleGraph {
  std::vector<std::vector<int>> adj;
};

inline std::uint32_t diameter(const SimpleGraph& g) {
  std::uint32_t best = 0;
  const int n = static_cast<int>(g.adj.size());
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.adj[static_cast<std::size_t>(x)])
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
    }
    for (int d : dist) best = std::max<std::uint32_t>(best, static_cast<std::uint32_t>(d));
  }
  return best;
}

/// G, C and B built from pairwise word comparison and explicit class sets.
struct Graphs {
  std::vector<Word> words;
  std::vector<std::pair<std::pair<int, int>, Move>> edges;
  SimpleGraph g;
  SimpleGraph c;
  SimpleGraph b;
};

inline SimpleGraph quotient(const std::vector<Word>& words,
                            const std::vector<std::pair<std::pair<int, int>, Move>>& edges, Move contracted) {
  const int n = static_cast<int>(words.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (int s = 0; s < n; ++s) {
    if (cls[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    cls[static_cast<std::size_t>(s)] = classes;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [e, kind] : edges) {
        if (kind != contracted) continue;
        int y = -1;
        if (e.first == x) y = e.second;
        if (e.second == x) y = e.first;
        if (y >= 0 && cls[static_cast<std::size_t>(y)] < 0) {
          cls[static_cast<std::size_t>(y)] = classes;
          stack.push_back(y);
        }
      }
    }
    ++classes;
  }
  std::set<std::pair<int, int>> qe;
  for (const auto& [e, kind] : edges) {
    const int a = cls[static_cast<std::size_t>(e.first)];
    const int b = cls[static_cast<std::size_t>(e.second)];
    if (kind != contracted && a != b) qe.insert({std::min(a, b), std::max(a, b)});
  }
  SimpleGraph out;
  out.adj.resize(static_cast<std::size_t>(classes));
  for (auto [a, b] : qe) {
    out.adj[static_cast<std::size_t>(a)].push_back(b);
    out.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return out;
}

inline Graphs graphs(const Permutation& pi) {
  Graphs out;
  const auto ws = reduced_words_recursive({pi.entries().begin(), pi.entries().end()});
  out.words.assign(ws.begin(), ws.end());
  const int n = static_cast<int>(out.words.size());
  out.g.adj.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto m = move_between(out.words[static_cast<std::size_t>(i)], out.words[static_cast<std::size_t>(j)]);
      if (m == Move::None) continue;
      out.edges.push_back({{i, j}, m});
      out.g.adj[static_cast<std::size_t>(i)].push_back(j);
      out.g.adj[static_cast<std::size_t>(j)].push_back(i);
    }
  out.c = quotient(out.words, out.edges, Move::Commutation);
  out.b = quotient(out.words, out.edges, Move::Braid);
  return out;
}

inline rwg::DiameterTriple diameters(const Permutation& pi) {
  const auto gs = graphs(pi);
  return {diameter(gs.g), diameter(gs.c), diameter(gs.b)};
}

/// |L2(pi)| from the flats of the braid arrangement: a codimension-two flat
/// is either two disjoint equalities x_i = x_j, x_k = x_l or one triple
/// x_i = x_j = x_k, and it counts when every hyperplane through it separates.
inline long long l2_from_flats(const Permutation& pi) {
  const int n = pi.size();
  auto inverted = [&](int i, int j) { return (pi(i) > pi(j)) == (i < j); };
  long long count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (inverted(i, j) && inverted(i, k) && inverted(j, k)) ++count;
  std::vector<std::pair<int, int>> hyperplanes;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) hyperplanes.push_back({i, j});
  for (std::size_t x = 0; x < hyperplanes.size(); ++x)
    for (std::size_t y = x + 1; y < hyperplanes.size(); ++y) {
      const auto [i, j] = hyperplanes[x];
      const auto [k, l] = hyperplanes[y];
      if (i == k || i == l || j == k || j == l) continue;
      if (inverted(i, j) && inverted(k, l)) ++count;
    }
  return count;
}

inline std::vector<Permutation> all_of_size(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_one_line(e));
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace oracle
