#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <vector>

#include "extremis/canon.hpp"
#include "extremis/graph.hpp"

namespace extremis {

/// Largest order produced by the internal generator; larger orders need an
/// ingested graph6 catalog.
inline constexpr int kMaxGeneratedOrder = 10;

/// Runs fn(worker, index) for every index in [0, count) on `jobs` threads.
/// Indices are handed out dynamically; the first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(w, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

// Vertex whose deletion defines the parent of g: the highest canonical label,
// restricted to non-cutvertices when generating connected graphs.
inline Vertex deletion_vertex(const Graph& g, const CanonicalLabeling& lab, bool connected_only) {
  Vertex best = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (connected_only && is_cutvertex_unchecked(g, v)) continue;
    if (best < 0 || lab.label[v] > lab.label[best]) best = v;
  }
  return best;
}

}  // namespace detail

/// Canonical augmentation: every one-vertex extension of `parent` (a canonical
/// representative) whose canonical deletion recovers the parent's class,
/// deduplicated. Results are canonical representatives.
inline std::vector<Graph> children_of(const Graph& parent, bool connected_only) {
  const int m = parent.order();
  const CanonicalForm parent_form = canonical_form(parent);
  std::vector<Graph> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = connected_only ? 1 : 0; mask < subsets; ++mask) {
    const Graph child = parent.with_vertex(VertexSet(mask));
    const CanonicalLabeling lab = canonical_labeling(child);
    const Vertex added = m;
    const Vertex del = detail::deletion_vertex(child, lab, connected_only);
    if (del != added && canonical_form(child.without_vertex(del)) != parent_form) continue;
    if (seen.insert(lab.form).second) out.push_back(lab.form.to_graph());
  }
  return out;
}

/// One representative per isomorphism class of graphs of order n (connected
/// ones only when requested), in a deterministic order independent of `jobs`.
inline std::vector<Graph> generate_graphs(int n, bool connected_only, int jobs = 1) {
  if (n < 1 || n > kMaxGeneratedOrder)
    throw GraphError("internal generation supports orders 1.." + std::to_string(kMaxGeneratedOrder));
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<Graph>> shards(level.size());
    parallel_for(level.size(), jobs, [&](int, std::size_t i) { shards[i] = children_of(level[i], connected_only); });
    std::vector<Graph> next;
    for (auto& s : shards) next.insert(next.end(), s.begin(), s.end());
    level = std::move(next);
  }
  return level;
}

/// Visits every generated graph of order n without materializing the last
/// level. Each worker owns one accumulator; visit(acc, graph) is called from
/// that worker only. Returns the per-worker accumulators.
template <class Accumulator, class Visit>
std::vector<Accumulator> scan_generated(int n, bool connected_only, int jobs, const Accumulator& init, Visit visit) {
  if (n < 1 || n > kMaxGeneratedOrder)
    throw GraphError("internal generation supports orders 1.." + std::to_string(kMaxGeneratedOrder));
  jobs = std::max(1, jobs);
  std::vector<Accumulator> accs(jobs, init);
  if (n == 1) {
    visit(accs[0], Graph(1));
    return accs;
  }
  const std::vector<Graph> parents = generate_graphs(n - 1, connected_only, jobs);
  parallel_for(parents.size(), jobs, [&](int w, std::size_t i) {
    for (const Graph& g : children_of(parents[i], connected_only)) visit(accs[w], g);
  });
  return accs;
}

/// Same contract as scan_generated, over a caller-supplied list of graphs.
template <class Accumulator, class Visit>
std::vector<Accumulator> scan_graphs(std::span<const Graph> graphs, int jobs, const Accumulator& init, Visit visit) {
  jobs = std::max(1, jobs);
  std::vector<Accumulator> accs(jobs, init);
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (graphs.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, jobs, [&](int w, std::size_t c) {
    const std::size_t end = std::min(graphs.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) visit(accs[w], graphs[i]);
  });
  return accs;
}

}  // namespace extremis
