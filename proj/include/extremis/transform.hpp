#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremis/counting.hpp"
#include "extremis/graph.hpp"

namespace extremis {

class TransformError : public std::invalid_argument {
 public:
  enum class Reason { Disconnected, NotInNeighborhood, Cutvertex, AnchorInNoMis, BadVertex };

  TransformError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// One Moon-Moser operation: y is rewired into a true twin of the anchor x.
struct TwinStep {
  Graph before;
  Graph after;
  Vertex x;
  Vertex y;
  /// N[x], identical in `before` and `after`.
  VertexSet closed_nbhd;
};

namespace detail {

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw TransformError(TransformError::Reason::Disconnected, "input graph is not connected");
}

inline void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw TransformError(TransformError::Reason::BadVertex, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace detail

/// Vertex lying in the most maximum independent sets, lowest index on ties.
inline Vertex best_anchor(const Graph& g) {
  detail::require_connected(g);
  const auto counts = *count_mis(g, true).per_vertex;
  Vertex best = 0;
  for (int u = 1; u < g.order(); ++u)
    if (counts[u] > counts[best]) best = u;
  return best;
}

/// Removes every edge at y and joins y to N[x] - {y}. Returns g unchanged when
/// y already is a true twin of x.
inline Graph make_true_twin(const Graph& g, Vertex x, Vertex y) {
  using Reason = TransformError::Reason;
  detail::require_vertex(g, x);
  detail::require_vertex(g, y);
  detail::require_connected(g);
  const VertexSet nbhd = g.closed_neighborhood(x);
  if (!nbhd.contains(y))
    throw TransformError(Reason::NotInNeighborhood,
                         "vertex " + std::to_string(y) + " is not in the closed neighborhood of " + std::to_string(x));
  if (g.closed_neighborhood(y) == nbhd) return g;
  if (is_cutvertex_unchecked(g, y))
    throw TransformError(Reason::Cutvertex, "vertex " + std::to_string(y) + " is a cutvertex");
  if ((*count_mis(g, true).per_vertex)[x] == 0)
    throw TransformError(Reason::AnchorInNoMis,
                         "anchor " + std::to_string(x) + " lies in no maximum independent set");
  return g.with_neighborhood(y, nbhd - VertexSet::single(y));
}

struct SaturationRun {
  Vertex anchor = 0;
  VertexSet closed_nbhd;
  std::vector<TwinStep> steps;
  Graph result{1};
};

/// Applies make_true_twin from the best anchor until every non-cutvertex of
/// N[x] is a true twin of x. Candidates are taken lowest index first.
inline SaturationRun moon_moser_saturate(const Graph& g, std::optional<Vertex> anchor = std::nullopt) {
  detail::require_connected(g);
  SaturationRun run;
  if (anchor) detail::require_vertex(g, *anchor);
  run.anchor = anchor ? *anchor : best_anchor(g);
  run.closed_nbhd = g.closed_neighborhood(run.anchor);
  run.result = g;
  // Twins stay twins under later steps, so each vertex of N is rewired at most once.
  for (;;) {
    std::optional<Vertex> candidate;
    for (Vertex y : run.closed_nbhd) {
      if (run.result.closed_neighborhood(y) == run.closed_nbhd) continue;
      if (is_cutvertex_unchecked(run.result, y)) continue;
      candidate = y;
      break;
    }
    if (!candidate) break;
    Graph next = make_true_twin(run.result, run.anchor, *candidate);
    run.steps.push_back({run.result, next, run.anchor, *candidate, run.closed_nbhd});
    run.result = std::move(next);
  }
  return run;
}

/// Deletes edges between `closed_nbhd` and the rest of the graph, in
/// lexicographic order and repeatedly, as long as the graph stays connected
/// and keeps its independence number.
inline Graph reduce_edges(const Graph& g, VertexSet closed_nbhd) {
  detail::require_connected(g);
  const int alpha = independence_number(g);
  Graph current = g;
  bool removed = true;
  while (removed) {
    removed = false;
    for (auto [u, v] : current.edges()) {
      if (closed_nbhd.contains(u) == closed_nbhd.contains(v)) continue;
      Graph candidate = current.without_edge(u, v);
      if (!is_connected(candidate) || independence_number(candidate) != alpha) continue;
      current = std::move(candidate);
      removed = true;
    }
  }
  return current;
}

/// reduce_edges around the closed neighborhood of the best anchor.
inline Graph reduce_edges(const Graph& g) {
  detail::require_connected(g);
  return reduce_edges(g, g.closed_neighborhood(best_anchor(g)));
}

}  // namespace extremis
