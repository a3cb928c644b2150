#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rwg/error.hpp"
#include "rwg/permutation.hpp"
#include "rwg/reduced_words.hpp"

namespace rwg {

enum class EdgeKind : std::uint8_t { Commutation, LongBraid };

constexpr EdgeKind other(EdgeKind kind) {
  return kind == EdgeKind::Commutation ? EdgeKind::LongBraid : EdgeKind::Commutation;
}

constexpr char kind_letter(EdgeKind kind) { return kind == EdgeKind::Commutation ? 'C' : 'B'; }

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeKind kind = EdgeKind::Commutation;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId v = 0;
  EdgeKind kind = EdgeKind::Commutation;
};

inline constexpr std::size_t kDefaultVertexCap = 200'000;

/// Simple undirected graph whose vertices carry payloads and whose edges are
/// tagged with the move kind. Immutable once constructed.
template <typename Payload>
class LabeledGraph {
 public:
  using payload_type = Payload;

  LabeledGraph() = default;

  /// Edges are normalized (u < v), sorted and deduplicated. Loops and a pair
  /// joined by edges of both kinds are rejected.
  LabeledGraph(std::vector<Payload> vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
    for (auto& e : edges) {
      if (e.u >= vertices_.size() || e.v >= vertices_.size())
        throw Error(ErrorCode::VertexNotFound, "edge endpoint out of range");
      if (e.u == e.v) throw Error(ErrorCode::Precondition, "loops are not allowed");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
        throw Error(ErrorCode::Precondition, "a vertex pair is joined by edges of both kinds");
    edges_ = std::move(edges);

    offsets_.assign(vertices_.size() + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(edges_.size() * 2);
    auto cursor = offsets_;
    for (const auto& e : edges_) {
      adjacency_[cursor[e.u]++] = {e.v, e.kind};
      adjacency_[cursor[e.v]++] = {e.u, e.kind};
    }

    order_.resize(vertices_.size());
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) { return vertices_[a] < vertices_[b]; });
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t edge_count(EdgeKind kind) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [kind](const Edge& e) { return e.kind == kind; }));
  }

  const Payload& vertex(VertexId id) const { return vertices_[id]; }
  std::span<const Payload> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(VertexId id) const {
    return std::span<const Neighbor>(adjacency_).subspan(offsets_[id], offsets_[id + 1] - offsets_[id]);
  }

  std::optional<VertexId> find(const Payload& payload) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), payload,
                               [&](VertexId id, const Payload& p) { return vertices_[id] < p; });
    if (it == order_.end() || !(vertices_[*it] == payload)) return std::nullopt;
    return *it;
  }

  VertexId id_of(const Payload& payload) const {
    if (auto id = find(payload)) return *id;
    throw Error(ErrorCode::VertexNotFound, "vertex is not in the graph");
  }

  std::optional<EdgeKind> edge_between(VertexId a, VertexId b) const {
    for (const auto& nb : neighbors(a))
      if (nb.v == b) return nb.kind;
    return std::nullopt;
  }

 private:
  std::vector<Payload> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<VertexId> order_;
};

using WordGraph = LabeledGraph<Word>;
template <typename Payload>
using ContractedGraph = LabeledGraph<std::vector<Payload>>;

/// G_pi: vertices are R(pi) in lexicographic order, edges are commutation and
/// long braid moves.
inline WordGraph build_word_graph(const Permutation& pi, std::size_t word_cap = kDefaultWordCap) {
  auto words = enumerate(pi, word_cap);
  auto lookup = [&](const Word& w) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    return static_cast<VertexId>(it - words.begin());
  };
  std::vector<Edge> edges;
  Word scratch;
  for (std::size_t id = 0; id < words.size(); ++id) {
    const Word& w = words[id];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const int a = w[i];
      const int b = w[i + 1];
      if (a - b > 1 || b - a > 1) {
        scratch = w;
        std::swap(scratch[i], scratch[i + 1]);
        if (w < scratch) edges.push_back({static_cast<VertexId>(id), lookup(scratch), EdgeKind::Commutation});
      }
      if (i + 2 < w.size() && w[i + 2] == a && (a - b == 1 || b - a == 1)) {
        scratch = w;
        scratch[i] = static_cast<std::uint8_t>(b);
        scratch[i + 1] = static_cast<std::uint8_t>(a);
        scratch[i + 2] = static_cast<std::uint8_t>(b);
        if (w < scratch) edges.push_back({static_cast<VertexId>(id), lookup(scratch), EdgeKind::LongBraid});
      }
    }
  }
  return WordGraph(std::move(words), std::move(edges));
}

/// Component index of every vertex under the edges of `kind` alone.
/// Components are numbered in order of their smallest vertex id.
template <typename Payload>
std::vector<VertexId> components(const LabeledGraph<Payload>& g, EdgeKind kind) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    if (e.kind != kind) continue;
    auto a = find(e.u);
    auto b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexId> label(g.vertex_count());
  std::vector<VertexId> root_label(g.vertex_count(), std::numeric_limits<VertexId>::max());
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = find(v);
    if (root_label[r] == std::numeric_limits<VertexId>::max()) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

/// Number of edges of the other kind whose endpoints share a component of
/// `kind`; contraction drops these as loops.
template <typename Payload>
std::size_t internal_edge_count(const LabeledGraph<Payload>& g, EdgeKind kind) {
  auto label = components(g, kind);
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (e.kind != kind && label[e.u] == label[e.v]) ++count;
  return count;
}

/// Quotient by the edges of `kind`. Each new vertex carries the sorted list of
/// its members; vertices are ordered by that list. Contracting Commutation
/// yields C_pi, contracting LongBraid yields B_pi.
template <typename Payload>
ContractedGraph<Payload> contract(const LabeledGraph<Payload>& g, EdgeKind kind) {
  auto label = components(g, kind);
  const std::size_t count = g.vertex_count() == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Payload>> members(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) members[label[v]].push_back(g.vertex(v));
  for (auto& m : members) std::sort(m.begin(), m.end());

  std::vector<VertexId> rank(count);
  std::iota(rank.begin(), rank.end(), VertexId{0});
  std::sort(rank.begin(), rank.end(), [&](VertexId a, VertexId b) { return members[a] < members[b]; });
  std::vector<VertexId> position(count);
  for (VertexId i = 0; i < count; ++i) position[rank[i]] = i;

  std::vector<std::vector<Payload>> vertices(count);
  for (VertexId i = 0; i < count; ++i) vertices[i] = std::move(members[rank[i]]);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.kind == kind) continue;
    auto a = position[label[e.u]];
    auto b = position[label[e.v]];
    if (a != b) edges.push_back({a, b, e.kind});
  }
  return ContractedGraph<Payload>(std::move(vertices), std::move(edges));
}

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

template <typename Payload>
std::vector<std::uint32_t> distances_from(const LabeledGraph<Payload>& g, VertexId source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (const auto& nb : g.neighbors(v)) {
      if (dist[nb.v] != kUnreached) continue;
      dist[nb.v] = dist[v] + 1;
      queue.push_back(nb.v);
    }
  }
  return dist;
}

template <typename Payload>
bool is_connected(const LabeledGraph<Payload>& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = distances_from(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreached) == dist.end();
}

struct DiameterOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
  unsigned threads = 1;
};

namespace detail {

// Plain adjacency in a breadth-first relabeling, so that neighbors sit close
// together in memory.
struct CompactGraph {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> adjacency;
  std::vector<VertexId> original;  // relabeled id -> graph id
  std::vector<VertexId> relabeled;  // graph id -> relabeled id

  std::size_t size() const { return original.size(); }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return std::span<const std::uint32_t>(adjacency).subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
};

template <typename Payload>
CompactGraph compact(const LabeledGraph<Payload>& g) {
  CompactGraph c;
  const auto n = g.vertex_count();
  c.relabeled.assign(n, kUnreached);
  c.original.reserve(n);
  for (VertexId root = 0; root < n; ++root) {
    if (c.relabeled[root] != kUnreached) continue;
    c.relabeled[root] = static_cast<VertexId>(c.original.size());
    c.original.push_back(root);
    for (std::size_t head = c.original.size() - 1; head < c.original.size(); ++head)
      for (const auto& nb : g.neighbors(c.original[head]))
        if (c.relabeled[nb.v] == kUnreached) {
          c.relabeled[nb.v] = static_cast<VertexId>(c.original.size());
          c.original.push_back(nb.v);
        }
  }
  c.offsets.assign(n + 1, 0);
  c.adjacency.reserve(g.edge_count() * 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& nb : g.neighbors(c.original[i])) c.adjacency.push_back(c.relabeled[nb.v]);
    std::sort(c.adjacency.begin() + c.offsets[i], c.adjacency.end());
    c.offsets[i + 1] = static_cast<std::uint32_t>(c.adjacency.size());
  }
  return c;
}

inline constexpr std::size_t kBatchWords = 4;
inline constexpr std::size_t kBatchSize = 64 * kBatchWords;

// Groups vertices into batches of up to 64 that lie close together, so that
// the frontiers of one batch overlap heavily during a bit-parallel BFS.
inline std::vector<std::vector<std::uint32_t>> clustered_batches(const CompactGraph& g,
                                                                 const std::vector<bool>& wanted) {
  std::vector<std::vector<std::uint32_t>> batches;
  std::vector<bool> taken(g.size(), false);
  std::vector<bool> queued(g.size(), false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t seed = 0; seed < g.size(); ++seed) {
    if (taken[seed] || !wanted[seed]) continue;
    std::vector<std::uint32_t> batch;
    queue.assign(1, seed);
    queued[seed] = true;
    for (std::size_t head = 0; head < queue.size() && batch.size() < kBatchSize; ++head) {
      const auto v = queue[head];
      if (!taken[v] && wanted[v]) {
        taken[v] = true;
        batch.push_back(v);
      }
      for (const auto nb : g.neighbors(v))
        if (!queued[nb]) {
          queued[nb] = true;
          queue.push_back(nb);
        }
    }
    for (auto v : queue) queued[v] = false;
    batches.push_back(std::move(batch));
  }
  return batches;
}

using Mask = std::array<std::uint64_t, kBatchWords>;

inline bool any(const Mask& m) {
  std::uint64_t acc = 0;
  for (auto w : m) acc |= w;
  return acc != 0;
}

struct SourceBits {
  Mask seen{};
  Mask frontier{};
  Mask next{};
};

// Runs one BFS per source in `batch` simultaneously, one bit per source, and
// returns the eccentricity of each source.
inline std::vector<std::uint32_t> batch_eccentricities(const CompactGraph& g, std::span<const std::uint32_t> batch,
                                                       std::vector<SourceBits>& bits) {
  std::vector<std::uint32_t> ecc(batch.size(), 0);
  std::vector<std::uint32_t> active;
  std::vector<std::uint32_t> incoming;
  std::vector<std::uint32_t> touched;
  for (std::size_t k = 0; k < batch.size(); ++k) {
    auto& b = bits[batch[k]];
    if (!any(b.seen)) {
      active.push_back(batch[k]);
      touched.push_back(batch[k]);
    }
    b.seen[k / 64] |= std::uint64_t{1} << (k % 64);
    b.frontier[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  std::uint32_t level = 0;
  while (!active.empty()) {
    ++level;
    incoming.clear();
    for (const auto v : active) {
      const Mask from = bits[v].frontier;
      for (const auto nb : g.neighbors(v)) {
        auto& target = bits[nb];
        std::uint64_t was = 0;
        std::uint64_t fresh_any = 0;
        for (std::size_t i = 0; i < kBatchWords; ++i) {
          const auto fresh = from[i] & ~target.seen[i];
          was |= target.next[i];
          fresh_any |= fresh;
          target.next[i] |= fresh;
        }
        if (was == 0 && fresh_any != 0) incoming.push_back(nb);
      }
    }
    for (const auto v : active) bits[v].frontier = {};
    Mask reached{};
    for (const auto v : incoming) {
      auto& b = bits[v];
      if (!any(b.seen)) touched.push_back(v);
      for (std::size_t i = 0; i < kBatchWords; ++i) {
        b.seen[i] |= b.next[i];
        reached[i] |= b.next[i];
      }
      b.frontier = b.next;
      b.next = {};
    }
    for (std::size_t i = 0; i < kBatchWords; ++i)
      for (auto r = reached[i]; r != 0; r &= r - 1)
        ecc[i * 64 + static_cast<std::size_t>(std::countr_zero(r))] = level;
    active.swap(incoming);
  }
  for (const auto v : touched) bits[v] = {};
  return ecc;
}

}  // namespace detail

namespace detail {

// Batched bit-parallel eccentricities over one compacted graph, cached per
// vertex. Vertices in one automorphism orbit share a cache slot.
class EccentricityEngine {
 public:
  EccentricityEngine(CompactGraph graph, unsigned threads, std::vector<std::uint32_t> representative)
      : g_(std::move(graph)),
        threads_(std::max(1u, threads)),
        representative_(std::move(representative)),
        known_(g_.size(), kUnreached) {}

  const CompactGraph& graph() const { return g_; }

  std::uint32_t known(std::uint32_t v) const { return known_[representative_[v]]; }

  void compute(std::span<const std::uint32_t> vertices) {
    std::vector<bool> wanted(g_.size(), false);
    bool any_wanted = false;
    for (auto v : vertices) {
      const auto r = representative_[v];
      if (known_[r] == kUnreached) wanted[r] = any_wanted = true;
    }
    if (!any_wanted) return;
    const auto batches = clustered_batches(g_, wanted);
    std::atomic<std::size_t> next_batch{0};
    auto worker = [&] {
      std::vector<SourceBits> bits(g_.size());
      for (auto b = next_batch++; b < batches.size(); b = next_batch++) {
        auto result = batch_eccentricities(g_, batches[b], bits);
        for (std::size_t k = 0; k < result.size(); ++k) known_[batches[b][k]] = result[k];
      }
    };
    const unsigned threads = std::min<unsigned>(threads_, static_cast<unsigned>(batches.size()));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
  }

 private:
  CompactGraph g_;
  unsigned threads_;
  std::vector<std::uint32_t> representative_;
  std::vector<std::uint32_t> known_;
};

inline std::vector<std::uint32_t> compact_distances(const CompactGraph& g, std::uint32_t source) {
  std::vector<std::uint32_t> dist(g.size(), kUnreached);
  std::vector<std::uint32_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto nb : g.neighbors(queue[head]))
      if (dist[nb] == kUnreached) {
        dist[nb] = dist[queue[head]] + 1;
        queue.push_back(nb);
      }
  return dist;
}

template <typename Payload>
void check_diameter_input(const LabeledGraph<Payload>& g, const DiameterOptions& options) {
  if (g.vertex_count() > options.vertex_cap)
    throw Error(ErrorCode::TooLarge, "graph has " + std::to_string(g.vertex_count()) +
                                         " vertices, above the diameter cap of " + std::to_string(options.vertex_cap));
  if (!is_connected(g)) throw Error(ErrorCode::Precondition, "diameter needs a connected graph");
}

}  // namespace detail

/// Eccentricity of every vertex in `sources` (all vertices when empty), by
/// exact all-pairs breadth-first search. The graph must be connected.
template <typename Payload>
std::vector<std::uint32_t> eccentricities(const LabeledGraph<Payload>& g, const DiameterOptions& options = {},
                                          std::span<const VertexId> sources = {}) {
  detail::check_diameter_input(g, options);
  std::vector<std::uint32_t> identity(g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0u);
  detail::EccentricityEngine engine(detail::compact(g), options.threads, identity);
  const auto& cg = engine.graph();
  std::vector<std::uint32_t> wanted;
  if (sources.empty())
    wanted = identity;
  else
    for (auto s : sources) wanted.push_back(cg.relabeled[s]);
  engine.compute(wanted);
  std::vector<std::uint32_t> ecc(g.vertex_count(), 0);
  for (auto v : wanted) ecc[cg.original[v]] = engine.known(v);
  return ecc;
}

/// Orbit representative (smallest id) of every vertex under the group
/// generated by `automorphisms`.
inline std::vector<VertexId> orbit_representatives(std::size_t vertex_count,
                                                   std::span<const std::vector<VertexId>> automorphisms) {
  std::vector<VertexId> rep(vertex_count, kUnreached);
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (rep[v] != kUnreached) continue;
    std::vector<VertexId> orbit{v};
    rep[v] = v;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& map : automorphisms) {
        const auto image = map[orbit[i]];
        if (rep[image] == kUnreached) {
          rep[image] = v;
          orbit.push_back(image);
        }
      }
  }
  return rep;
}

/// diam(g): the largest shortest-path distance over all vertex pairs.
///
/// Exact. A breadth-first search from a central vertex u splits the graph
/// into distance levels; two vertices within distance i-1 of u are at most
/// 2(i-1) apart, so eccentricities are computed from the outermost level
/// inward until that bound cannot beat the best value found. `automorphisms`
/// may list vertex maps known to preserve edges; eccentricity is computed once
/// per orbit.
template <typename Payload>
std::uint32_t diameter(const LabeledGraph<Payload>& g, const DiameterOptions& options = {},
                       std::span<const std::vector<VertexId>> automorphisms = {}) {
  if (g.vertex_count() <= 1) return 0;
  detail::check_diameter_input(g, options);
  auto cg = detail::compact(g);
  const auto rep_original = orbit_representatives(g.vertex_count(), automorphisms);
  std::vector<std::uint32_t> rep(g.vertex_count());
  for (std::uint32_t v = 0; v < cg.size(); ++v) rep[v] = cg.relabeled[rep_original[cg.original[v]]];
  detail::EccentricityEngine engine(std::move(cg), options.threads, std::move(rep));
  const auto& c = engine.graph();

  // double sweep for a long path, then its midpoint as the center
  auto farthest = [](const std::vector<std::uint32_t>& dist) {
    return static_cast<std::uint32_t>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  const auto a = farthest(detail::compact_distances(c, 0));
  const auto from_a = detail::compact_distances(c, a);
  const auto b = farthest(from_a);
  std::uint32_t lower = from_a[b];
  auto center = b;
  for (std::uint32_t step = 0; step < lower / 2; ++step)
    for (const auto nb : c.neighbors(center))
      if (from_a[nb] + 1 == from_a[center]) {
        center = nb;
        break;
      }

  const auto from_center = detail::compact_distances(c, center);
  const auto radius = from_center[farthest(from_center)];
  std::vector<std::vector<std::uint32_t>> levels(radius + 1);
  for (std::uint32_t v = 0; v < c.size(); ++v) levels[from_center[v]].push_back(v);
  lower = std::max(lower, radius);

  std::uint32_t level = radius;
  while (level > 0 && lower < 2 * level) {
    // take whole levels until a batch is reasonably full
    std::vector<std::uint32_t> sources;
    auto next_level = level;
    do {
      sources.insert(sources.end(), levels[next_level].begin(), levels[next_level].end());
      --next_level;
    } while (next_level > 0 && sources.size() < detail::kBatchSize && lower < 2 * next_level);
    engine.compute(sources);
    for (auto v : sources) lower = std::max(lower, engine.known(v));
    level = next_level;
    // every pair inside levels 0..level is at most 2*level apart
  }
  return lower;
}

/// Per-kind edge counts along one shortest path from u to v. Each vertex's BFS
/// parent is its lowest-id neighbor one step closer to u.
struct MoveCounts {
  std::uint32_t commutation = 0;
  std::uint32_t braid = 0;
  friend bool operator==(const MoveCounts&, const MoveCounts&) = default;
};

template <typename Payload>
MoveCounts move_counts_along(const LabeledGraph<Payload>& g, const Payload& from, const Payload& to) {
  const auto u = g.id_of(from);
  const auto v = g.id_of(to);
  const auto dist = distances_from(g, u);
  if (dist[v] == kUnreached) throw Error(ErrorCode::Precondition, "vertices are not connected");
  MoveCounts counts;
  for (auto x = v; x != u;) {
    std::optional<Neighbor> parent;
    for (const auto& nb : g.neighbors(x))
      if (dist[nb.v] + 1 == dist[x] && (!parent || nb.v < parent->v)) parent = nb;
    (parent->kind == EdgeKind::Commutation ? counts.commutation : counts.braid)++;
    x = parent->v;
  }
  return counts;
}

/// Vertex maps of G_pi induced by the word symmetries that fix pi: reversal
/// when pi is an involution, letter complement i -> n-i when pi equals its
/// 180-degree rotation, and their composite.
inline std::vector<std::vector<VertexId>> word_automorphisms(const Permutation& pi, const WordGraph& g) {
  std::vector<std::vector<VertexId>> maps;
  const int n = pi.size();
  auto build = [&](bool reverse, bool complement) {
    std::vector<VertexId> map(g.vertex_count());
    for (VertexId id = 0; id < g.vertex_count(); ++id) {
      Word w = g.vertex(id);
      if (reverse) std::reverse(w.begin(), w.end());
      if (complement)
        for (auto& c : w) c = static_cast<std::uint8_t>(n - c);
      map[id] = g.id_of(w);
    }
    maps.push_back(std::move(map));
  };
  const bool involution = pi == pi.inverse();
  const bool rotation_fixed = pi == apply_symmetry(pi, Symmetry::R180);
  if (involution) build(true, false);
  if (rotation_fixed) build(false, true);
  if (pi == apply_symmetry(pi, Symmetry::RM1) && !(involution && rotation_fixed)) build(true, true);
  return maps;
}

/// Contracted vertex holding each vertex of g.
template <typename Payload>
std::vector<VertexId> class_ids(const LabeledGraph<Payload>& g, const ContractedGraph<Payload>& quotient) {
  std::vector<VertexId> out(g.vertex_count(), kUnreached);
  for (VertexId c = 0; c < quotient.vertex_count(); ++c)
    for (const auto& member : quotient.vertex(c)) out[g.id_of(member)] = c;
  return out;
}

/// Vertex maps of a contraction induced by vertex maps of the original graph.
/// `classes` comes from class_ids().
inline std::vector<std::vector<VertexId>> induced_automorphisms(std::span<const VertexId> classes,
                                                                std::span<const std::vector<VertexId>> maps) {
  std::vector<std::vector<VertexId>> out;
  const auto count = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  for (const auto& map : maps) {
    std::vector<VertexId> induced(count, kUnreached);
    for (VertexId v = 0; v < classes.size(); ++v) induced[classes[v]] = classes[map[v]];
    out.push_back(std::move(induced));
  }
  return out;
}

/// Per-kind parity pair of every vertex: a BFS tree assigns (number of
/// commutation edges mod 2, number of braid edges mod 2) along tree paths.
/// Returns true when every edge flips exactly the parity of its own kind,
/// i.e. every cycle has an even number of edges of each kind.
template <typename Payload>
bool parity_coloring_consistent(const LabeledGraph<Payload>& g) {
  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> color(g.vertex_count(), kUnset);
  auto flip = [](std::uint8_t c, EdgeKind kind) {
    return static_cast<std::uint8_t>(c ^ (kind == EdgeKind::Commutation ? 1 : 2));
  };
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (color[root] != kUnset) continue;
    color[root] = 0;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (const auto& nb : g.neighbors(x)) {
        const auto want = flip(color[x], nb.kind);
        if (color[nb.v] == kUnset) {
          color[nb.v] = want;
          queue.push_back(nb.v);
        } else if (color[nb.v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

template <typename Payload>
bool is_bipartite(const LabeledGraph<Payload>& g) {
  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> side(g.vertex_count(), kUnset);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto x = queue[head];
      for (const auto& nb : g.neighbors(x)) {
        if (side[nb.v] == kUnset) {
          side[nb.v] = side[x] ^ 1;
          queue.push_back(nb.v);
        } else if (side[nb.v] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace rwg
