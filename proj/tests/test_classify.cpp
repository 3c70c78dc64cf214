#include <gtest/gtest.h>

#include <random>

#include "extremis/classify.hpp"
#include "support/oracles.hpp"

using namespace extremis;

TEST(Classify, Examples) {
  const auto c5 = classify_extremal(cycle_graph(5), 5, 2);
  EXPECT_EQ(c5.kind, FamilyKind::C5Exception);
  EXPECT_TRUE(c5.in_family);
  EXPECT_TRUE(c5.special_cutvertices.empty());

  for (int n = 3; n <= 9; ++n) {
    const auto star = classify_extremal(star_graph(n - 1), n, n - 1);
    EXPECT_EQ(star.kind, FamilyKind::FamilyMember);
    EXPECT_EQ(star.special_cutvertices, VertexSet{0});
  }

  const auto p4 = classify_extremal(path_graph(4), 4, 2);
  EXPECT_EQ(p4.kind, FamilyKind::FExtremal);
  // Both inner vertices of P4 can play the hub.
  EXPECT_EQ(p4.special_cutvertices, (VertexSet{1, 2}));
}

TEST(Classify, RejectsInconsistentInput) {
  EXPECT_THROW(classify_extremal(cycle_graph(5), 5, 3), ClassifyError);
  EXPECT_THROW(classify_extremal(cycle_graph(5), 6, 2), ClassifyError);
}

TEST(Classify, GExtremalAcrossRange) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 12; ++n)
    for (int alpha = 1; alpha < n; ++alpha) {
      const Graph g = build_G(n, alpha).permuted(oracle::random_permutation(n, rng));
      EXPECT_EQ(classify_extremal(g, n, alpha).kind, FamilyKind::GExtremal) << n << ',' << alpha;
    }
}

TEST(Classify, FExtremalHasHub) {
  std::mt19937_64 rng(10);
  for (int n = 4; n <= 12; ++n)
    for (int alpha = 2; 2 * alpha <= n; ++alpha) {
      const auto perm = oracle::random_permutation(n, rng);
      const auto d = classify_extremal(build_F(n, alpha).permuted(perm), n, alpha);
      EXPECT_EQ(d.kind, FamilyKind::FExtremal);
      EXPECT_TRUE(d.in_family);
      EXPECT_TRUE(d.special_cutvertices.contains(perm[kHub]));
    }
}

TEST(Classify, FamilyMembersExtendFAtTheHub) {
  for (int n = 3; n <= 9; ++n)
    for (int alpha = 2; alpha < n; ++alpha) {
      if (n >= 2 * alpha) continue;
      const auto members = enumerate_family(n, alpha);
      for (const Graph& g : members) {
        const auto d = classify_extremal(g, n, alpha);
        EXPECT_EQ(d.kind, FamilyKind::FamilyMember);
        ASSERT_FALSE(d.special_cutvertices.empty());
        EXPECT_TRUE(d.special_cutvertices.contains(kHub));
        // Dropping hub edges not present in F(n, alpha) recovers F(n, alpha).
        const Graph f = build_F(n, alpha);
        EXPECT_EQ(g.with_neighborhood(kHub, f.neighbors(kHub)), f);
      }
    }
}

TEST(Classify, NonExtremalGraphs) {
  EXPECT_EQ(classify_extremal(cycle_graph(6), 6, 3).kind, FamilyKind::None);
  EXPECT_FALSE(classify_extremal(cycle_graph(6), 6, 3).in_family);
  EXPECT_EQ(classify_extremal(path_graph(5), 5, 3).kind, FamilyKind::None);
  EXPECT_EQ(to_string(FamilyKind::FamilyMember), "Family-member");
}

TEST(Classify, CompleteGraphIsBothGAndFamily) {
  const auto d = classify_extremal(complete_graph(5), 5, 1);
  EXPECT_EQ(d.kind, FamilyKind::GExtremal);
  EXPECT_TRUE(d.in_family);
  EXPECT_EQ(d.special_cutvertices, VertexSet::range(5));
}
