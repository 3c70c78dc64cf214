#include <gtest/gtest.h>

#include <random>

#include "extremis/graph.hpp"
#include "extremis/graph6.hpp"
#include "support/oracles.hpp"

using namespace extremis;

namespace {

void expect_well_formed(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.neighbors(v).contains(v));
    EXPECT_TRUE(g.neighbors(v).is_subset_of(g.vertices()));
    for (Vertex u : g.neighbors(v)) EXPECT_TRUE(g.has_edge(u, v));
  }
}

}  // namespace

TEST(Graph, MakeGraphBuildsExactEdgeSet) {
  const Graph k2(2, {{0, 1}});
  EXPECT_EQ(k2.edge_count(), 1);
  EXPECT_TRUE(k2.has_edge(1, 0));

  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(c5, cycle_graph(5));
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);

  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ((std::vector<int>{p4.degree(0), p4.degree(1), p4.degree(2), p4.degree(3)}),
            (std::vector<int>{1, 2, 2, 1}));
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{-1, 2}}), GraphError);
  EXPECT_THROW(Graph(0), GraphError);
  EXPECT_THROW(Graph(63), GraphError);
  EXPECT_NO_THROW(Graph(62));
}

TEST(Graph, AddAndRemoveEdge) {
  EXPECT_EQ(add_edge(Graph(2), 0, 1), Graph(2, {{0, 1}}));
  EXPECT_EQ(remove_edge(cycle_graph(5), 0, 1), Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  EXPECT_EQ(remove_edge(cycle_graph(5), 0, 1).edge_count(), 4);
  EXPECT_EQ(add_edge(path_graph(4), 0, 3), cycle_graph(4));
  // idempotent
  EXPECT_EQ(add_edge(cycle_graph(4), 0, 1), cycle_graph(4));
  EXPECT_EQ(remove_edge(path_graph(4), 0, 2), path_graph(4));
  EXPECT_THROW(add_edge(path_graph(4), 2, 2), GraphError);
}

TEST(Graph, MutationsLeaveOriginalUntouched) {
  const Graph c5 = cycle_graph(5);
  const Graph copy = c5;
  (void)c5.with_edge(0, 2);
  (void)c5.without_edge(0, 1);
  (void)c5.with_neighborhood(0, VertexSet{2, 3});
  EXPECT_EQ(c5, copy);
}

TEST(Graph, RemoveAfterAddRestoresRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    for (auto [u, v] : g.complement().edges()) {
      const Graph h = g.with_edge(u, v);
      expect_well_formed(h);
      EXPECT_EQ(h.without_edge(u, v), g);
    }
  }
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(cycle_graph(5)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_connected(Graph(6, {{0, 1}, {2, 3}, {4, 5}})));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_EQ(components(Graph(5, {{0, 3}, {1, 4}}), VertexSet::range(5)),
            (std::vector<VertexSet>{VertexSet{0, 3}, VertexSet{1, 4}, VertexSet{2}}));
}

TEST(Graph, Cutvertices) {
  EXPECT_TRUE(is_cutvertex(path_graph(3), 1));
  EXPECT_FALSE(is_cutvertex(path_graph(3), 0));
  for (int v = 0; v < 5; ++v) EXPECT_FALSE(is_cutvertex(cycle_graph(5), v));
  EXPECT_FALSE(is_cutvertex(Graph(1), 0));
  EXPECT_THROW(is_cutvertex(Graph(4, {{0, 1}, {2, 3}}), 0), GraphError);
}

TEST(Graph, VertexDeletionAndInduced) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(p4.without_vertex(0), path_graph(3));
  EXPECT_EQ(p4.without_vertex(1), Graph(3, {{1, 2}}));
  const Graph star = star_graph(3);
  EXPECT_EQ(star.without_vertex(0), Graph(3));
  EXPECT_EQ(star.with_vertex(VertexSet{0}).degree(0), 4);
}

TEST(Graph, PermutedPreservesStructure) {
  std::mt19937_64 rng(11);
  const Graph g = oracle::random_graph(9, 0.5, rng);
  const auto perm = oracle::random_permutation(9, rng);
  const Graph h = g.permuted(perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(perm[u], perm[v]));
  EXPECT_THROW(g.permuted(std::vector<int>{0, 0, 1, 2, 3, 4, 5, 6, 7}), GraphError);
}

TEST(Graph, FromAdjacencyValidates) {
  std::vector<VertexSet> asym{VertexSet{1}, VertexSet{}};
  EXPECT_THROW(Graph::from_adjacency(asym), GraphError);
  std::vector<VertexSet> loop{VertexSet{0}};
  EXPECT_THROW(Graph::from_adjacency(loop), GraphError);
}
