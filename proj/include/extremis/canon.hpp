#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "extremis/graph.hpp"
#include "extremis/graph6.hpp"

namespace extremis {

/// Isomorphism-invariant representative of a graph: the adjacency rows of the
/// canonically relabeled graph. Equal forms iff isomorphic graphs.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {}

  int order() const { return n_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  Graph to_graph() const {
    std::vector<VertexSet> adjacency;
    adjacency.reserve(rows_.size());
    for (auto r : rows_) adjacency.emplace_back(r);
    return Graph::from_adjacency(adjacency);
  }

  /// graph6 of the canonical relabeling; this is how forms are persisted.
  std::string graph6() const { return encode_graph6(to_graph()); }

  /// Upper-triangle adjacency bit-string x(0,1) x(0,2) x(1,2) ... of the canonical relabeling.
  std::string bits() const {
    std::string out;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) out.push_back((rows_[i] >> j) & 1 ? '1' : '0');
    return out;
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.order());
    for (auto r : f.rows()) {
      h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// A canonical labeling: label[v] is the canonical position of vertex v.
struct CanonicalLabeling {
  std::vector<Vertex> label;
  CanonicalForm form;
};

namespace detail {

using Partition = std::vector<VertexSet>;

// Splits cells by neighbor count into splitter cells until the partition is
// equitable. Cell order depends only on structure, never on vertex labels.
inline void refine(const Graph& g, Partition& cells) {
  std::array<int, kMaxOrder> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      Partition next;
      next.reserve(cells.size() + 4);
      for (const VertexSet cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        int lo = kMaxOrder;
        int hi = -1;
        for (Vertex v : cell) {
          count[v] = (g.neighbors(v) & splitter).size();
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) {
          next.push_back(cell);
          continue;
        }
        for (int c = lo; c <= hi; ++c) {
          VertexSet part;
          for (Vertex v : cell)
            if (count[v] == c) part.insert(v);
          if (!part.empty()) next.push_back(part);
        }
      }
      if (next.size() != cells.size()) {
        cells = std::move(next);
        changed = true;
      }
    }
  }
}

inline std::size_t target_cell(const Partition& cells) {
  std::size_t best = cells.size();
  int best_size = kMaxOrder + 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int s = cells[i].size();
    if (s > 1 && s < best_size) {
      best = i;
      best_size = s;
    }
  }
  return best;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition root{g_.vertices()};
    refine(g_, root);
    explore(root);
    return {best_label_, CanonicalForm(n_, best_rows_)};
  }

 private:
  static constexpr int kNoJump = -1;
  static constexpr std::size_t kMaxAutomorphisms = 64;

  int explore(const Partition& cells) {
    const int depth = static_cast<int>(prefix_.size());
    const std::size_t t = target_cell(cells);
    if (t == cells.size()) return leaf(cells);

    VertexSet explored;
    std::vector<Vertex> orbit;
    std::size_t orbit_autos = static_cast<std::size_t>(-1);
    for (Vertex v : cells[t]) {
      if (!explored.empty()) {
        if (orbit_autos != autos_.size()) {
          orbit = orbits_fixing_prefix();
          orbit_autos = autos_.size();
        }
        bool redundant = false;
        for (Vertex u : explored)
          if (orbit[u] == orbit[v]) redundant = true;
        if (redundant) continue;
      }
      explored.insert(v);

      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == t) {
          child.push_back(VertexSet::single(v));
          child.push_back(cells[i] - VertexSet::single(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      refine(g_, child);
      prefix_.push_back(v);
      const int jump = explore(child);
      prefix_.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& cells) {
    std::vector<Vertex> label(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i].first()] = static_cast<Vertex>(i);
    std::vector<std::uint64_t> rows(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (Vertex u : g_.neighbors(v)) rows[label[v]] |= std::uint64_t{1} << label[u];

    if (first_label_.empty()) {
      first_label_ = label;
      first_rows_ = rows;
      first_path_ = prefix_;
      best_label_ = std::move(label);
      best_rows_ = std::move(rows);
      return kNoJump;
    }
    if (rows == first_rows_) {
      record_automorphism(first_label_, label);
      // This subtree mirrors the one explored along the first path: resume at
      // the deepest ancestor the two paths share.
      std::size_t common = 0;
      while (common < prefix_.size() && common < first_path_.size() && prefix_[common] == first_path_[common])
        ++common;
      return static_cast<int>(common);
    }
    if (rows == best_rows_) {
      record_automorphism(best_label_, label);
      return kNoJump;
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_label_ = std::move(label);
    }
    return kNoJump;
  }

  // Maps the vertex at each canonical position under `from` to the vertex at
  // the same position under `to`.
  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    if (autos_.size() >= kMaxAutomorphisms) return;
    std::vector<Vertex> at_position(n_);
    for (int v = 0; v < n_; ++v) at_position[to[v]] = v;
    std::vector<Vertex> gamma(n_);
    for (int v = 0; v < n_; ++v) gamma[v] = at_position[from[v]];
    autos_.push_back(std::move(gamma));
  }

  std::vector<Vertex> orbits_fixing_prefix() const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (Vertex p : prefix_)
        if (gamma[p] != p) fixes = false;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> first_path_;
  std::vector<Vertex> first_label_;
  std::vector<std::uint64_t> first_rows_;
  std::vector<Vertex> best_label_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) { return detail::CanonSearch(g).run(); }

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace extremis
