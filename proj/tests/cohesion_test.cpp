// Copyright 2026 The passnet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "passnet/cohesion.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "passnet/geodesics.hpp"
#include "passnet/oracle.hpp"
#include "test_support.hpp"

namespace passnet {
namespace {

BinaryAdjacency Eps(const PassingNetwork& net) { return binary_adjacency(net); }

PassingNetwork TwoTrianglesWithBridge() {
  std::vector<std::vector<double>> rows(6, std::vector<double>(6, 0.0));
  auto link = [&](std::size_t a, std::size_t b) { rows[a][b] = rows[b][a] = 1.0; };
  link(0, 1), link(1, 2), link(0, 2), link(3, 4), link(4, 5), link(3, 5), link(2, 3);
  return testing::network(rows);
}

TEST(WeightedClustering, BidirectionalTriangle) {
  const auto c = weighted_clustering(testing::complete(3, 2.5));
  for (double v : c.per_player) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(WeightedClustering, Chain3) {
  const auto c = weighted_clustering(testing::chain3());
  EXPECT_EQ(c.per_player[0], 0.0);
  EXPECT_EQ(c.per_player[1], 0.0);
  EXPECT_EQ(c.per_player[2], 0.0);
  EXPECT_EQ(c.team_average, 0.0);
}

TEST(WeightedClustering, CompleteUniform) {
  const auto c = weighted_clustering(testing::complete(11, 3.0));
  for (double v : c.per_player) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_NEAR(c.team_average, 1.0, 1e-12);
}

TEST(WeightedClustering, VariantsDifferInTheMiddleFactor) {
  // 0->1, 0->2, 1->2, 2->0. For player 0 the printed pattern needs A_21 and
  // A_12 * A_10, both absent; the transitivity pattern closes 0->1->2->0.
  const auto net = testing::network({{0, 1, 1}, {0, 0, 1}, {1, 0, 0}});
  EXPECT_EQ(weighted_clustering(net, ClusteringVariant::passers).per_player[0], 0.0);
  EXPECT_NEAR(weighted_clustering(net, ClusteringVariant::onnela).per_player[0], 0.5, 1e-15);
}

TEST(WeightedClustering, PaperPatternCanExceedOne) {
  // Player 0 passes to 1 and 2 (u = 2); players 3 and 4 pass to 0, 1 and 2.
  // Four (j,k) terms equal 1, normalizer 2 * 1.
  const auto net = testing::network(
      {{0, 1, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 1, 0, 0}});
  EXPECT_NEAR(weighted_clustering(net).per_player[0], 2.0, 1e-15);
  EXPECT_EQ(weighted_clustering(net, ClusteringVariant::onnela).per_player[0], 0.0);
}

TEST(WeightedClustering, HandComputedWeights) {
  // Triangle with A_01 = 8, A_10 = 1, all other arcs 1, max(A) = 8.
  // Player 0, u = 2: (j=1,k=2) cbrt(8*1*1)/8 = 1/4; (j=2,k=1) cbrt(1*1*1)/8.
  const auto net = testing::network({{0, 8, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_NEAR(weighted_clustering(net).per_player[0], (0.25 + 0.125) / 2.0, 1e-15);
}

TEST(WeightedClustering, ScaleInvariant) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const PassingNetwork net = build_network(testing::random_record(rng, 3 + trial % 9, 0.6, 1, 20, 3));
    if (net.max_weight() == 0.0) continue;
    for (auto variant : {ClusteringVariant::passers, ClusteringVariant::onnela}) {
      const auto a = weighted_clustering(net, variant);
      const auto b = weighted_clustering(testing::scaled(net, 13.7), variant);
      for (std::size_t i = 0; i < net.size(); ++i) EXPECT_NEAR(a.per_player[i], b.per_player[i], 1e-12);
      EXPECT_NEAR(a.team_average, b.team_average, 1e-12);
    }
  }
}

TEST(WeightedClustering, AverageIsMeanAndScoresNonNegative) {
  std::mt19937_64 rng(19);
  const PassingNetwork net = build_network(testing::random_record(rng, 11, 0.7, 1, 30, 4));
  const auto c = weighted_clustering(net);
  double sum = 0.0;
  for (double v : c.per_player) {
    EXPECT_GE(v, 0.0);
    sum += v;
  }
  EXPECT_NEAR(c.team_average, sum / 11.0, 1e-15);
}

TEST(WeightedClustering, RejectsEmptyNetwork) {
  EXPECT_THROW(weighted_clustering(testing::network({{0, 0}, {0, 0}})), DomainError);
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(Eps(testing::complete(11, 1.0))).size(), 11u);
  EXPECT_EQ(max_clique(Eps(testing::chain3())), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(max_clique(Eps(testing::star(6))), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(max_clique(BinaryAdjacency(1, 0)), (std::vector<std::size_t>{0}));
}

TEST(MaxClique, AndProjectionNeedsBothDirections) {
  EXPECT_EQ(max_clique(Eps(testing::chain3()), CliqueProjection::both).size(), 1u);
  EXPECT_EQ(max_clique(Eps(testing::complete(5, 1.0)), CliqueProjection::both).size(), 5u);
}

TEST(MaxClique, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 10);
    const BinaryAdjacency eps = Eps(build_network(testing::random_record(rng, n, 0.3 + 0.05 * (trial % 8))));
    for (auto projection : {CliqueProjection::either, CliqueProjection::both}) {
      const auto clique = max_clique(eps, projection);
      EXPECT_TRUE(oracle::is_clique(eps, clique, projection));
      EXPECT_TRUE(oracle::is_maximal_clique(eps, clique, projection));
      EXPECT_EQ(clique, oracle::brute_max_clique(eps, projection));
    }
  }
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity_directed(Eps(testing::directed_cycle(3, 1.0))), 1);
  EXPECT_EQ(edge_connectivity_directed(Eps(testing::chain3())), 0);
  for (std::size_t n = 2; n <= 6; ++n)
    EXPECT_EQ(edge_connectivity_directed(Eps(testing::complete(n, 1.0))), static_cast<int>(n) - 1);
  EXPECT_EQ(edge_connectivity_undirected(Eps(testing::directed_cycle(3, 1.0))), 2);
  EXPECT_EQ(edge_connectivity_undirected(Eps(testing::chain3())), 2);
  EXPECT_EQ(edge_connectivity_undirected(Eps(TwoTrianglesWithBridge())), 1);
}

TEST(EdgeConnectivity, CompleteGraphMatchesBruteForce) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto eps = Eps(testing::complete(n, 1.0));
    EXPECT_EQ(oracle::brute_edge_connectivity_directed(eps, 4), static_cast<int>(n) - 1);
    EXPECT_EQ(oracle::brute_edge_connectivity_undirected(eps, 4), static_cast<int>(n) - 1);
  }
}

TEST(NodeConnectivity, Examples) {
  EXPECT_EQ(node_connectivity(Eps(testing::complete(11, 1.0))), 10);
  EXPECT_EQ(node_connectivity(Eps(testing::star(6))), 1);
  EXPECT_EQ(node_connectivity(Eps(testing::undirected_cycle(5, 1.0))), 2);
  EXPECT_EQ(oracle::brute_node_connectivity(Eps(testing::undirected_cycle(5, 1.0))), 2);
  EXPECT_EQ(node_connectivity(Eps(testing::network({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}))), 0);
}

TEST(Connectivity, RejectsSinglePlayer) {
  EXPECT_THROW(edge_connectivity_directed(BinaryAdjacency(1, 0)), DomainError);
  EXPECT_THROW(edge_connectivity_undirected(BinaryAdjacency(1, 0)), DomainError);
  EXPECT_THROW(node_connectivity(BinaryAdjacency(1, 0)), DomainError);
}

TEST(Connectivity, MatchesDeletionSearch) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    const BinaryAdjacency eps = Eps(build_network(testing::random_record(rng, n, 0.35 + 0.1 * (trial % 6))));
    const int k = edge_connectivity_directed(eps);
    const int ku = edge_connectivity_undirected(eps);
    const int kn = node_connectivity(eps);
    auto check = [](int got, std::optional<int> want) {
      if (want) {
        EXPECT_EQ(got, *want);
      } else {
        EXPECT_GT(got, 3);
      }
    };
    check(k, oracle::brute_edge_connectivity_directed(eps));
    check(ku, oracle::brute_edge_connectivity_undirected(eps));
    check(kn, oracle::brute_node_connectivity(eps));
    EXPECT_LE(k, ku);
  }
}

TEST(Connectivity, ZeroExactlyWhenSomePairIsUnreachable) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const PassingNetwork net = build_network(testing::random_record(rng, 2 + trial % 8, 0.5));
    const auto d = all_pairs_geodesics(net).distance;
    bool unreachable = false;
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = 0; j < net.size(); ++j) unreachable = unreachable || d(i, j).is_infinite();
    EXPECT_EQ(edge_connectivity_directed(Eps(net)) == 0, unreachable);
  }
}

TEST(SummarizeCohesion, CompleteDigraph) {
  const CohesionSummary s = summarize_cohesion(testing::complete(11, 1.0));
  EXPECT_EQ(s.edge_connectivity, 10);
  EXPECT_EQ(s.edge_connectivity_undirected, 10);
  EXPECT_EQ(s.node_connectivity, 10);
  EXPECT_EQ(s.max_clique.size(), 11u);
  EXPECT_NEAR(s.clustering.team_average, 1.0, 1e-12);
}

}  // namespace
}  // namespace passnet
