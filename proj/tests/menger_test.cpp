#include "hiernet/menger.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hiernet/topology.hpp"
#include "test_support.hpp"

namespace hiernet {
namespace {

using testing::cycle_graph;
using testing::graph_of;

TEST(DisjointPaths, AntipodalCubeVerticesHaveThree) {
  const Graph q3 = hypercube(3);
  const auto r = disjoint_paths(q3, 0, 7, 3);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(r.family.size(), 3u);
  EXPECT_EQ(check_path_family(q3, r.family), "");
}

TEST(DisjointPaths, FourCycleFallsShortWithTwoVertexCut) {
  const Graph c4 = cycle_graph(4);
  const auto r = disjoint_paths(c4, 0, 2, 3);
  EXPECT_EQ(r.family.size(), 2u);
  ASSERT_TRUE(r.cut.has_value());
  EXPECT_EQ(r.cut->separator, (std::vector<VertexId>{1, 3}));
  EXPECT_FALSE(r.cut->direct_edge.has_value());
  EXPECT_EQ(check_cut(c4, *r.cut), "");
  EXPECT_EQ(check_path_family(c4, r.family), "");
}

TEST(DisjointPaths, DirectEdgeIsOnePath) {
  const Graph g = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto r = disjoint_paths(g, 0, 2, 1);
  ASSERT_TRUE(r.complete());
  ASSERT_EQ(r.family.size(), 1u);
  EXPECT_EQ(r.family.paths[0], (std::vector<VertexId>{0, 2}));
}

TEST(DisjointPaths, DirectEdgeAppearsInCutWitness) {
  const Graph g = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto r = disjoint_paths(g, 0, 2, 3);
  EXPECT_EQ(r.family.size(), 2u);
  ASSERT_TRUE(r.cut.has_value());
  EXPECT_EQ(r.cut->direct_edge, Edge(0, 2));
  EXPECT_EQ(r.cut->separator, std::vector<VertexId>{1});
  EXPECT_EQ(check_cut(g, *r.cut), "");
}

TEST(DisjointPaths, ArgumentErrors) {
  const Graph g = cycle_graph(4);
  EXPECT_THROW(disjoint_paths(g, 0, 2, 0), ArgumentError);
  EXPECT_THROW(disjoint_paths(g, 1, 1, 1), ArgumentError);
  EXPECT_THROW(disjoint_paths(g, 0, 9, 1), ArgumentError);
}

TEST(DisjointPaths, OutputIsDeterministic) {
  const Graph g = hfq(2).graph;
  EXPECT_EQ(disjoint_paths(g, 0, 15, 4).family.paths, disjoint_paths(g, 0, 15, 4).family.paths);
}

TEST(KFan, StarCentreReachesEveryLeaf) {
  const Graph star = graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto r = k_fan(star, 0, {1, 2, 3, 4}, 4);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(r.family.size(), 4u);
  for (const auto& p : r.family.paths) EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(check_path_family(star, r.family), "");
}

TEST(KFan, ClusterDeletedCubicNetworkHasFanOfSizeTwo) {
  const HierGraph h = hcn(2);
  const auto cluster = h.cluster_vertices(0);
  const auto rest = remove_vertices(h.graph, cluster);
  // Endpoints of the cross edges leaving cluster 0.
  std::vector<VertexId> ends;
  for (VertexId v : cluster) ends.push_back(*rest.from_original[h.out_neighbour[v]]);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  for (VertexId z = 0; z < rest.graph.order(); ++z) {
    if (std::binary_search(ends.begin(), ends.end(), z)) continue;
    const auto r = k_fan(rest.graph, z, ends, 2);
    ASSERT_TRUE(r.complete()) << "z=" << z;
    EXPECT_EQ(check_path_family(rest.graph, r.family), "");
  }
}

TEST(KFan, PathGraphIsCutByMiddleVertex) {
  const Graph path = graph_of(3, {{0, 1}, {1, 2}});
  const auto r = k_fan(path, 0, {1, 2}, 2);
  EXPECT_EQ(r.family.size(), 1u);
  ASSERT_TRUE(r.cut.has_value());
  EXPECT_EQ(r.cut->separator, std::vector<VertexId>{1});
}

TEST(KFan, PathsStopAtFirstTarget) {
  const Graph path = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto r = k_fan(path, 0, {2, 3}, 1);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(r.family.paths[0], (std::vector<VertexId>{0, 1, 2}));
}

TEST(KFan, ArgumentErrors) {
  const Graph g = cycle_graph(5);
  EXPECT_THROW(k_fan(g, 0, {1}, 2), ArgumentError);
  EXPECT_THROW(k_fan(g, 0, {0, 1}, 1), ArgumentError);
  EXPECT_THROW(k_fan(g, 0, {1, 2}, 0), ArgumentError);
}

TEST(VertexConnectivity, CompleteGraphMarker) {
  const auto r = vertex_connectivity(testing::complete_graph(4));
  EXPECT_EQ(r.kappa, 3u);
  EXPECT_TRUE(r.complete_graph);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(VertexConnectivity, KnownFamilies) {
  EXPECT_EQ(vertex_connectivity(hcn(2).graph).kappa, 3u);
  EXPECT_EQ(vertex_connectivity(hfq(2).graph).kappa, 4u);
  EXPECT_EQ(vertex_connectivity(hs(3).graph).kappa, 3u);
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(vertex_connectivity(star_graph(n)).kappa, n - 1) << n;
    EXPECT_EQ(vertex_connectivity(hypercube(n)).kappa, n) << n;
  }
  for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(vertex_connectivity(folded_hypercube(n)).kappa, n + 1) << n;
}

TEST(VertexConnectivity, WitnessSeparatesAndMatchesValue) {
  const Graph g = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const auto r = vertex_connectivity(g);
  EXPECT_EQ(r.kappa, 1u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->separator.size(), 1u);
  EXPECT_EQ(check_cut(g, *r.witness), "");
}

TEST(VertexConnectivity, DisconnectedIsZero) {
  const auto r = vertex_connectivity(graph_of(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(r.kappa, 0u);
}

TEST(VertexConnectivity, SingleVertexIsAnError) {
  EXPECT_THROW(vertex_connectivity(make_graph(1, std::span<const Edge>{})), ArgumentError);
}

TEST(VertexConnectivity, ClusterDeletionLeavesBaseDegree) {
  for (const HierGraph& h : {hs(3), hcn(3)}) {
    for (ClusterId c = 0; c < h.cluster_count; ++c) {
      const auto cluster = h.cluster_vertices(c);
      EXPECT_EQ(vertex_connectivity(remove_vertices(h.graph, cluster).graph).kappa, h.base_degree);
    }
  }
}

class MengerDuality : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(MengerDuality, PathCountEqualsBruteForceCut) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 4 + GetParam() % 9;
  const Graph g = testing::random_connected_graph(rng, n, 0.35);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const auto brute = testing::brute_min_vertex_cut(g, x, y);
      const auto r = disjoint_paths(g, x, y, n);
      EXPECT_EQ(check_path_family(g, r.family), "");
      ASSERT_TRUE(r.cut.has_value());
      EXPECT_EQ(check_cut(g, *r.cut), "");
      if (brute) {
        EXPECT_EQ(r.family.size(), *brute) << x << "," << y;
        EXPECT_EQ(r.cut->separator.size(), *brute);
      } else {
        EXPECT_EQ(r.family.size(), r.cut->separator.size() + 1);
      }
    }
  }
}

TEST_P(MengerDuality, ConnectivityBoundedByMinimumDegreeAndStrategiesAgree) {
  std::mt19937_64 rng(GetParam() * 7919);
  const Graph g = testing::random_connected_graph(rng, 5 + GetParam() % 10, 0.4);
  const auto all = vertex_connectivity(g, PairStrategy::kAllPairs);
  const auto nb = vertex_connectivity(g, PairStrategy::kNeighbourhood);
  EXPECT_EQ(all.kappa, nb.kappa);
  EXPECT_LE(all.kappa, degree_profile(g).min_degree);
  if (all.witness) {
    EXPECT_EQ(all.witness->separator.size(), all.kappa);
    EXPECT_EQ(check_cut(g, *all.witness), "");
  }
  std::optional<std::size_t> brute;
  for (VertexId x = 0; x < g.order(); ++x) {
    for (VertexId y = x + 1; y < g.order(); ++y) {
      if (auto c = testing::brute_min_vertex_cut(g, x, y)) brute = brute ? std::min(*brute, *c) : *c;
    }
  }
  EXPECT_EQ(all.kappa, brute.value_or(g.order() - 1));
}

INSTANTIATE_TEST_SUITE_P(Seeds, MengerDuality, ::testing::Range<std::uint64_t>(1, 31));

}  // namespace
}  // namespace hiernet
