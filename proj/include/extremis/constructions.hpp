#pragma once

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "extremis/canon.hpp"
#include "extremis/count.hpp"
#include "extremis/counting.hpp"
#include "extremis/graph.hpp"

namespace extremis {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertex labeling shared by every clique-star construction: cliques are laid
/// out consecutively, the hub x0 is vertex 0 and the attachment vertex x_i is
/// the first vertex of clique i.
inline constexpr Vertex kHub = 0;

/// Clique orders (n_0, ..., n_{k-1}) of a star of cliques whose hub x0 lies in
/// clique 0 and has exactly one neighbor in each other clique.
struct CliqueStarProfile {
  std::vector<int> sizes;

  int order() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
  int cliques() const { return static_cast<int>(sizes.size()); }

  void validate() const {
    if (sizes.empty()) throw ConstructionError("clique-star profile is empty");
    for (int s : sizes)
      if (s < 1) throw ConstructionError("clique orders must be at least 1");
    if (order() > kMaxOrder) throw ConstructionError("clique-star order exceeds " + std::to_string(kMaxOrder));
  }

  /// First vertex of each clique.
  std::vector<Vertex> clique_starts() const {
    std::vector<Vertex> starts;
    Vertex next = 0;
    for (int s : sizes) {
      starts.push_back(next);
      next += s;
    }
    return starts;
  }
};

namespace detail {

inline void check_order_and_alpha(int n, int alpha, bool strict) {
  if (n < 1 || n > kMaxOrder) throw ConstructionError("order must lie in 1.." + std::to_string(kMaxOrder));
  if (alpha < 1) throw ConstructionError("independence number must be at least 1");
  if (strict ? alpha >= n : alpha > n)
    throw ConstructionError("independence number " + std::to_string(alpha) + (strict ? " must be below " : " exceeds ") +
                            "order " + std::to_string(n));
}

inline Graph disjoint_cliques(const std::vector<int>& sizes) {
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<Edge> edges;
  Vertex start = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.emplace_back(start + i, start + j);
    start += s;
  }
  return Graph(n, edges);
}

}  // namespace detail

/// Clique orders of the complement of the Turan graph: n mod alpha cliques of
/// order ceil(n/alpha) first, then the cliques of order floor(n/alpha).
inline std::vector<int> turan_complement_sizes(int n, int alpha) {
  detail::check_order_and_alpha(n, alpha, false);
  const int q = n / alpha;
  const int r = n % alpha;
  std::vector<int> sizes(alpha, q);
  for (int i = 0; i < r; ++i) sizes[i] = q + 1;
  return sizes;
}

/// G(n, alpha): disjoint union of alpha balanced cliques.
inline Graph build_G(int n, int alpha) { return detail::disjoint_cliques(turan_complement_sizes(n, alpha)); }

inline Graph build_clique_star(const CliqueStarProfile& profile) {
  profile.validate();
  Graph g = detail::disjoint_cliques(profile.sizes);
  const auto starts = profile.clique_starts();
  for (std::size_t i = 1; i < starts.size(); ++i) g = g.with_edge(kHub, starts[i]);
  return g;
}

/// F(n, alpha): G(n, alpha) plus the edges from the hub x0 = kHub to the first
/// vertex of every other clique.
inline Graph build_F(int n, int alpha) {
  detail::check_order_and_alpha(n, alpha, true);
  return build_clique_star({turan_complement_sizes(n, alpha)});
}

/// g(n, alpha) = floor(n/alpha)^(alpha - n mod alpha) * ceil(n/alpha)^(n mod alpha).
inline Count g_formula(int n, int alpha) {
  detail::check_order_and_alpha(n, alpha, false);
  const unsigned q = n / alpha;
  const unsigned r = n % alpha;
  return checked_mul(checked_pow(q, alpha - r), checked_pow(q + 1, r));
}

/// f(n, alpha) = g(n-1, alpha) + prod_{i>=1} (|C_i| - 1) over the attached
/// cliques of F(n, alpha). The product vanishes when n < 2 alpha.
inline Count f_formula(int n, int alpha) {
  detail::check_order_and_alpha(n, alpha, true);
  const auto sizes = turan_complement_sizes(n, alpha);
  Count through_hub = 1;
  for (std::size_t i = 1; i < sizes.size(); ++i) through_hub = checked_mul(through_hub, sizes[i] - 1);
  return checked_add(g_formula(n - 1, alpha), through_hub);
}

/// (n_0 - 1) prod_{k>=1} n_k + prod_{k>=1} (n_k - 1)
inline Count clique_star_count_formula(const CliqueStarProfile& profile) {
  profile.validate();
  Count avoiding_hub = static_cast<Count>(profile.sizes[0] - 1);
  Count through_hub = 1;
  for (std::size_t k = 1; k < profile.sizes.size(); ++k) {
    avoiding_hub = checked_mul(avoiding_hub, profile.sizes[k]);
    through_hub = checked_mul(through_hub, profile.sizes[k] - 1);
  }
  return checked_add(avoiding_hub, through_hub);
}

/// Members of the extremal family of connected graphs of order n and
/// independence number alpha, pairwise non-isomorphic, F(n, alpha) first.
/// For n < 2 alpha these are F(n, alpha) with every subset of the missing hub
/// edges added.
inline std::vector<Graph> enumerate_family(int n, int alpha) {
  detail::check_order_and_alpha(n, alpha, true);
  const Graph f = build_F(n, alpha);
  if (n >= 2 * alpha) {
    if (n == 5 && alpha == 2) return {f, cycle_graph(5)};
    return {f};
  }
  const std::vector<Vertex> optional_edges = (f.vertices() - f.closed_neighborhood(kHub)).to_vector();
  if (optional_edges.size() > 20) throw ConstructionError("family enumeration too large");
  const Graph rest = build_G(n - 1, alpha);
  const CanonicalForm rest_form = canonical_form(rest);
  std::vector<Graph> members;
  std::set<CanonicalForm> seen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << optional_edges.size()); ++mask) {
    VertexSet hub_nbrs = f.neighbors(kHub);
    for (std::size_t i = 0; i < optional_edges.size(); ++i)
      if ((mask >> i) & 1U) hub_nbrs.insert(optional_edges[i]);
    const Graph candidate = f.with_neighborhood(kHub, hub_nbrs);
    if (canonical_form(candidate.without_vertex(kHub)) != rest_form) continue;
    if (independence_number(candidate) != alpha) continue;
    if (seen.insert(canonical_form(candidate)).second) members.push_back(candidate);
  }
  return members;
}

}  // namespace extremis
