#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extremis {

/// Largest order representable in single-byte graph6 and in one 64-bit word.
inline constexpr int kMaxOrder = 62;

using Vertex = int;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of vertices of a graph with at most kMaxOrder vertices, one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Values are immutable once built;
/// every mutation returns a new graph.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
      throw GraphError("graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
      link(u, v);
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from per-vertex neighbor sets, validating symmetry and irreflexivity.
  static Graph from_adjacency(std::span<const VertexSet> adjacency) {
    Graph g(static_cast<int>(adjacency.size()));
    const VertexSet all = VertexSet::range(g.n_);
    for (int v = 0; v < g.n_; ++v) {
      if (!adjacency[v].is_subset_of(all)) throw GraphError("neighbor out of range");
      if (adjacency[v].contains(v)) throw GraphError("loop edge at vertex " + std::to_string(v));
      g.adj_[v] = adjacency[v];
    }
    for (int v = 0; v < g.n_; ++v)
      for (Vertex u : g.adj_[v])
        if (!g.adj_[u].contains(v)) throw GraphError("asymmetric adjacency");
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[v] | VertexSet::single(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v, ordered lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    Graph g = *this;
    g.link(u, v);
    return g;
  }

  Graph without_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    Graph g = *this;
    g.adj_[u].erase(v);
    g.adj_[v].erase(u);
    return g;
  }

  /// Replaces the neighborhood of v by `nbrs` (v itself is ignored).
  Graph with_neighborhood(Vertex v, VertexSet nbrs) const {
    check_vertex(v);
    nbrs.erase(v);
    if (!nbrs.is_subset_of(vertices())) throw GraphError("neighbor out of range");
    Graph g = *this;
    for (Vertex u : g.adj_[v]) g.adj_[u].erase(v);
    g.adj_[v] = nbrs;
    for (Vertex u : nbrs) g.adj_[u].insert(v);
    return g;
  }

  /// Graph with one extra vertex n adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const {
    if (n_ + 1 > kMaxOrder) throw GraphError("graph order exceeds " + std::to_string(kMaxOrder));
    if (!nbrs.is_subset_of(vertices())) throw GraphError("neighbor out of range");
    Graph g(n_ + 1);
    g.adj_ = adj_;
    g.adj_[n_] = nbrs;
    for (Vertex u : nbrs) g.adj_[u].insert(n_);
    return g;
  }

  /// G - v; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const {
    check_vertex(v);
    if (n_ == 1) throw GraphError("cannot delete the only vertex");
    std::vector<Vertex> keep;
    for (int u = 0; u < n_; ++u)
      if (u != v) keep.push_back(u);
    return induced(keep);
  }

  /// Subgraph induced by `keep`, relabeled in the given order.
  Graph induced(std::span<const Vertex> keep) const {
    std::array<Vertex, kMaxOrder> position;
    position.fill(-1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_vertex(keep[i]);
      position[keep[i]] = static_cast<Vertex>(i);
    }
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (Vertex u : adj_[keep[i]])
        if (position[u] >= 0) g.adj_[i].insert(position[u]);
    return g;
  }

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
    VertexSet seen;
    for (Vertex p : perm) {
      check_vertex(p);
      seen.insert(p);
    }
    if (seen.size() != n_) throw GraphError("not a permutation");
    Graph g(n_);
    for (int v = 0; v < n_; ++v)
      for (Vertex u : adj_[v]) g.adj_[perm[v]].insert(perm[u]);
    return g;
  }

  Graph complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = vertices() - closed_neighborhood(v);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
  void check_pair(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
  }
  void link(Vertex u, Vertex v) {
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) { return g.with_edge(u, v); }
inline Graph remove_edge(const Graph& g, Vertex u, Vertex v) { return g.without_edge(u, v); }

/// Vertices reachable from `start` inside `within`.
inline VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) { return reachable(g, 0, g.vertices()) == g.vertices(); }

/// Connected components of G[within], each as a vertex set, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  while (!within.empty()) {
    VertexSet c = reachable(g, within.first(), within);
    out.push_back(c);
    within -= c;
  }
  return out;
}

inline bool is_cutvertex_unchecked(const Graph& g, Vertex v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  if (rest.empty()) return false;
  return reachable(g, rest.first(), rest) != rest;
}

/// True iff G - v is disconnected. G must be connected.
inline bool is_cutvertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
  if (!is_connected(g)) throw GraphError("is_cutvertex requires a connected graph");
  return is_cutvertex_unchecked(g, v);
}

inline Graph complete_graph(int n) { return Graph(n).complement(); }

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

/// K_{1,leaves} with center 0.
inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

}  // namespace extremis
