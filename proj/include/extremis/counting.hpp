#pragma once

#include <optional>
#include <vector>

#include "extremis/count.hpp"
#include "extremis/graph.hpp"

namespace extremis {

/// Independence number, number of maximum independent sets and, on request,
/// the number of maximum independent sets through each vertex.
struct CountResult {
  int alpha = 0;
  Count num_mis = 0;
  std::optional<std::vector<Count>> per_vertex;
};

namespace detail {

// Exact branch and bound over induced subgraphs G[P]. solve(P, bound) returns
// the exact (alpha, count) of G[P] whenever alpha(G[P]) >= bound; otherwise it
// returns some size below `bound` and the count is meaningless.
class MisCounter {
 public:
  struct Partial {
    int size;
    Count count;
  };

  explicit MisCounter(const Graph& g) : g_(g) {}

  Partial solve(VertexSet p, int bound) const {
    if (p.empty()) return {0, 1};

    VertexSet isolated;
    for (Vertex v : p)
      if ((g_.neighbors(v) & p).empty()) isolated.insert(v);
    if (!isolated.empty()) {
      const int k = isolated.size();
      Partial r = solve(p - isolated, bound - k);
      return {r.size + k, r.count};
    }

    const int cover = clique_cover_bound(p);
    if (cover < bound) return {cover, 0};
    if (cover == 1) return {1, static_cast<Count>(p.size())};

    const auto comps = components(g_, p);
    if (comps.size() > 1) {
      Partial total{0, 1};
      for (VertexSet c : comps) {
        Partial r = solve(c, 0);
        total.size += r.size;
        total.count = checked_mul(total.count, r.count);
      }
      return total;
    }

    Vertex pivot = -1;
    int best_degree = -1;
    for (Vertex v : p) {
      const int d = (g_.neighbors(v) & p).size();
      if (d > best_degree) {
        best_degree = d;
        pivot = v;
      }
    }

    const Partial with = solve(p - g_.closed_neighborhood(pivot), bound - 1);
    const int with_size = with.size + 1;
    const bool with_valid = with_size >= bound;
    const int bound_without = with_valid ? std::max(bound, with_size) : bound;
    const Partial without = solve(p - VertexSet::single(pivot), bound_without);
    const bool without_valid = without.size >= bound_without;

    if (with_valid && without_valid) {
      if (without.size > with_size) return without;
      return {with_size, checked_add(with.count, without.count)};
    }
    if (with_valid) return {with_size, with.count};
    if (without_valid) return without;
    return {bound - 1, 0};
  }

 private:
  // Number of cliques in a greedy clique cover of G[P]; an upper bound on alpha(G[P]).
  int clique_cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      const Vertex v = p.first();
      VertexSet clique = VertexSet::single(v);
      VertexSet candidates = g_.neighbors(v) & p;
      while (!candidates.empty()) {
        const Vertex w = candidates.first();
        clique.insert(w);
        candidates &= g_.neighbors(w);
      }
      p -= clique;
      ++cliques;
    }
    return cliques;
  }

  const Graph& g_;
};

}  // namespace detail

inline int independence_number(const Graph& g) { return detail::MisCounter(g).solve(g.vertices(), 0).size; }

inline CountResult count_mis(const Graph& g, bool per_vertex = false) {
  const detail::MisCounter counter(g);
  const auto all = counter.solve(g.vertices(), 0);
  CountResult result{all.size, all.count, std::nullopt};
  if (per_vertex) {
    std::vector<Count> through(g.order(), 0);
    for (int u = 0; u < g.order(); ++u) {
      const auto rest = counter.solve(g.vertices() - g.closed_neighborhood(u), all.size - 1);
      if (rest.size == all.size - 1) through[u] = rest.count;
    }
    result.per_vertex = std::move(through);
  }
  return result;
}

/// Largest order enumerate_mis accepts.
inline constexpr int kMaxEnumerationOrder = 30;

/// Every maximum independent set exactly once, in lexicographic order of their
/// sorted vertex lists.
inline std::vector<VertexSet> enumerate_mis(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder)
    throw GraphError("enumerate_mis supports order <= " + std::to_string(kMaxEnumerationOrder));
  const detail::MisCounter counter(g);
  const int alpha = counter.solve(g.vertices(), 0).size;
  std::vector<VertexSet> out;
  auto rec = [&](auto&& self, VertexSet candidates, VertexSet chosen, int need) -> void {
    if (need == 0) {
      out.push_back(chosen);
      return;
    }
    if (candidates.size() < need || counter.solve(candidates, need).size < need) return;
    const Vertex v = candidates.first();
    self(self, candidates - g.closed_neighborhood(v), chosen | VertexSet::single(v), need - 1);
    self(self, candidates - VertexSet::single(v), chosen, need);
  };
  rec(rec, g.vertices(), VertexSet{}, alpha);
  return out;
}

/// Lowest-indexed vertex lying in no maximum independent set, if any.
inline std::optional<Vertex> vertex_in_no_mis(const Graph& g) {
  const auto result = count_mis(g, true);
  for (int u = 0; u < g.order(); ++u)
    if ((*result.per_vertex)[u] == 0) return u;
  return std::nullopt;
}

}  // namespace extremis
