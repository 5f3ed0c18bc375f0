#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stepwise/stepwise.hpp"

using namespace stepwise;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph c5() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

}  // namespace

TEST(GraphFromEdges, PathHasDegreeSequence121) {
  const auto g = p3();
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(GraphFromEdges, RejectsSelfLoop) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), InvalidGraph);
}

TEST(GraphFromEdges, RejectsDuplicateEdgeInEitherOrientation) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {0, 1}}), InvalidGraph);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), InvalidGraph);
}

TEST(GraphFromEdges, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InvalidGraph);
}

TEST(GraphFromEdges, CompleteBipartite32HasSixEdges) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 5; ++b) e.emplace_back(a, b);
  const auto g = graph_from_edges(5, e);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g, complete_bipartite(3, 2));
}

TEST(GraphFromEdges, AdjacencyIsSymmetricAndEdgesSorted) {
  const auto g = Graph::from_edges(4, {{3, 1}, {2, 0}, {1, 0}});
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(GraphFromEdges, WideGraphUsesSeveralWords) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < 130; ++v) e.emplace_back(0, v);
  const auto g = graph_from_edges(130, e);
  EXPECT_EQ(g.degree(0), 129u);
  EXPECT_TRUE(g.adjacent(129, 0));
  EXPECT_FALSE(g.adjacent(128, 129));
  EXPECT_THROW((void)g.row_mask(0), LimitExceeded);
}

TEST(Degree, CompleteBipartiteSides) {
  const auto g = complete_bipartite(3, 2);
  EXPECT_EQ(degree(g, 0), 2u);
  EXPECT_EQ(degree(g, 4), 3u);
  EXPECT_EQ(degree(p3(), 1), 2u);
  EXPECT_THROW((void)degree(g, 5), std::out_of_range);
}

TEST(BfsDistances, Examples) {
  EXPECT_EQ(bfs_distances(p3(), 0), (std::vector<std::size_t>{0, 1, 2}));
  for (auto d : bfs_distances(complete_bipartite(3, 2), 1)) EXPECT_LE(d, 2u);
  const auto two = Graph::from_edges(2, {});
  EXPECT_EQ(bfs_distances(two, 0)[1], kUnreachable);
}

TEST(MetricSummary, Examples) {
  const auto k32 = metric_summary(complete_bipartite(3, 2));
  EXPECT_EQ(k32.diameter, 2u);
  EXPECT_EQ(k32.radius, 2u);
  EXPECT_EQ(k32.wiener, 14u);
  EXPECT_TRUE(k32.is_2_self_centered);

  const auto path = metric_summary(p3());
  EXPECT_EQ(path.diameter, 2u);
  EXPECT_EQ(path.radius, 1u);
  EXPECT_EQ(path.wiener, 4u);
  EXPECT_FALSE(path.is_2_self_centered);

  EXPECT_EQ(metric_summary(gamma(2, 3)).diameter, 3u);
}

TEST(MetricSummary, RejectsDisconnected) {
  EXPECT_THROW(metric_summary(Graph::from_edges(2, {})), NotConnected);
}

TEST(Bipartition, Examples) {
  EXPECT_FALSE(bipartition(c5()).is_bipartite);
  const auto b = bipartition(complete_bipartite(3, 2));
  ASSERT_TRUE(b.is_bipartite);
  EXPECT_EQ(b.parts[0].size() + b.parts[1].size(), 5u);
  EXPECT_EQ(b.parts[b.part_with_max_degree].size(), 2u);
  EXPECT_EQ(b.parts[1 - b.part_with_max_degree].size(), 3u);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(p3()));
  EXPECT_FALSE(is_connected(Graph::from_edges(2, {})));
  EXPECT_TRUE(is_connected(complete_bipartite(3, 2)));
  EXPECT_TRUE(is_connected(Graph::from_edges(0, {})));
}

TEST(ClassifyCyclicity, Examples) {
  EXPECT_EQ(classify_cyclicity(p3()), Cyclicity::tree);
  EXPECT_EQ(classify_cyclicity(c4()), Cyclicity::unicyclic);
  EXPECT_EQ(classify_cyclicity(complete_bipartite(3, 2)), Cyclicity::other);
  EXPECT_STREQ(to_string(Cyclicity::unicyclic), "unicyclic");
  EXPECT_THROW(classify_cyclicity(Graph::from_edges(3, {{0, 1}})), NotConnected);
}

TEST(GraphProperties, HandshakeAndMetricsAgreeWithFloydWarshall) {
  std::mt19937_64 rng(20261015);
  int connected_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 11;
    const auto g = oracle::random_graph(rng, n, 0.15 + 0.05 * (trial % 12));
    std::size_t deg_sum = 0;
    for (auto d : g.degrees()) deg_sum += d;
    ASSERT_EQ(deg_sum, 2 * g.size());

    const auto s = oracle::from_graph(g);
    ASSERT_EQ(is_connected(g), oracle::connected(s));
    ASSERT_EQ(bipartition(g).is_bipartite, oracle::bipartite(s));
    if (!is_connected(g)) continue;
    ++connected_seen;
    const auto m = metric_summary(g);
    const auto ref = oracle::metrics(s);
    ASSERT_EQ(m.diameter, static_cast<std::size_t>(ref.diameter));
    ASSERT_EQ(m.radius, static_cast<std::size_t>(ref.radius));
    ASSERT_EQ(m.wiener, static_cast<std::size_t>(ref.wiener));
    ASSERT_LE(m.radius, m.diameter);
    ASSERT_LE(m.diameter, 2 * m.radius);
    std::size_t tr = 0;
    for (auto t : m.transmissions) tr += t;
    ASSERT_EQ(2 * m.wiener, tr);
  }
  EXPECT_GT(connected_seen, 100);
}

TEST(GraphProperties, BipartitionSidesAreProperColorings) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, 2 + trial % 10, 0.25);
    const auto b = bipartition(g);
    if (!b.is_bipartite) continue;
    for (auto [u, v] : g.edges()) ASSERT_NE(b.side[u], b.side[v]);
    ASSERT_EQ(b.parts[0].size() + b.parts[1].size(), g.order());
  }
}
