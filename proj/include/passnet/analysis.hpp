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

#ifndef PASSNET_ANALYSIS_HPP_
#define PASSNET_ANALYSIS_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "passnet/centrality.hpp"
#include "passnet/cohesion.hpp"
#include "passnet/geodesics.hpp"
#include "passnet/net_model.hpp"
#include "passnet/oracle.hpp"
#include "passnet/report.hpp"
#include "passnet/svg.hpp"

namespace passnet {

struct AnalysisConfig {
  PagerankParams pagerank;
  double closeness_weight = 0.5;
  double tie_tol = kDefaultTieTolerance;
  ClusteringVariant clustering = ClusteringVariant::passers;
  CliqueProjection clique = CliqueProjection::either;
  RenderStyle render;

  /// Effective settings, echoed into every report.
  std::string provenance() const {
    return fmt::format("passnet p={} q={} tol={} max_iter={} w={} tie_tol={} clustering={} clique={}",
                       pagerank.p, pagerank.q, pagerank.tol, pagerank.max_iter, closeness_weight, tie_tol,
                       to_string(clustering), to_string(clique));
  }
};

struct TeamAnalysis {
  PathCountResult geodesics;
  PlayerScores scores;
  CohesionSummary cohesion;
  TeamSummary summary;
  std::vector<PlayerScoreRow> players;
};

inline TeamAnalysis analyze(const PassingNetwork& net, const AnalysisConfig& config = {}) {
  TeamAnalysis a;
  a.geodesics = all_pairs_geodesics(net, config.tie_tol);
  a.scores = score_players(net, a.geodesics, config.closeness_weight, config.pagerank);
  a.cohesion = summarize_cohesion(net, config.clustering, config.clique);
  a.summary = team_summary(net, a.scores, a.cohesion);
  a.players = player_table(net, a.scores, a.cohesion.clustering);
  return a;
}

struct OracleCheck {
  std::string name;
  bool agree = true;
  std::string detail;
};

inline constexpr std::size_t kOracleMaxPlayers = 8;

/// Re-derives geodesics, betweenness, connectivity and the maximum clique by
/// brute force and compares them with the fast implementations.
inline std::vector<OracleCheck> check_against_oracles(const TeamRecord& record,
                                                      const AnalysisConfig& config = {}) {
  const std::size_t n = record.aggregate_passes.size();
  if (n > kOracleMaxPlayers)
    throw DomainError(fmt::format("oracle checks support at most {} players, fixture has {}",
                                  kOracleMaxPlayers, n));
  const PassingNetwork net = build_network(record);
  const PathCountResult fast = all_pairs_geodesics(net, config.tie_tol);
  const oracle::EnumeratedGeodesics slow = oracle::enumerate_geodesics(oracle::exact_weights(record));
  std::vector<OracleCheck> checks;

  const std::string checked = fmt::format("{} ordered pairs", n * n);
  OracleCheck dist{"distances", true, checked}, counts{"geodesic counts", true, checked},
      through{"through counts", true, checked};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& exact = slow.distance(j, k);
      const Length got = fast.distance(j, k);
      bool ok = exact ? got.is_finite() : got.is_infinite();
      if (ok && exact) {
        const double e = static_cast<double>(*exact);
        ok = std::abs(got.value() - e) <= 1e-9 * std::max(1.0, std::abs(e));
      }
      if (!ok && dist.agree) {
        dist.agree = false;
        dist.detail = fmt::format("first mismatch at ({},{})", j, k);
      }
      if (fast.geodesic_count(j, k) != slow.geodesic_count(j, k) && counts.agree) {
        counts.agree = false;
        counts.detail = fmt::format("g({},{}) = {} vs oracle {}", j, k, fast.geodesic_count(j, k),
                                    slow.geodesic_count(j, k));
      }
      for (std::size_t i = 0; i < n; ++i)
        if (fast.through(i, j, k) != slow.through_count(i, j, k) && through.agree) {
          through.agree = false;
          through.detail = fmt::format("n[{}][{}][{}] = {} vs oracle {}", i, j, k, fast.through(i, j, k),
                                       slow.through_count(i, j, k));
        }
    }
  checks.push_back(dist);
  checks.push_back(counts);
  checks.push_back(through);

  if (n >= 3) {
    OracleCheck btw{"betweenness", true, fmt::format("{} players", n)};
    const auto got = betweenness(fast);
    const auto want = oracle::enumerated_betweenness(slow);
    for (std::size_t i = 0; i < n; ++i) {
      const double e = static_cast<double>(want[i]);
      if (std::abs(got[i] - e) > 1e-12 && btw.agree) {
        btw.agree = false;
        btw.detail = fmt::format("player {}: {} vs oracle {}", i, got[i], e);
      }
    }
    checks.push_back(btw);
  }

  const BinaryAdjacency eps = binary_adjacency(net);
  auto compare_int = [&](const std::string& name, int got, std::optional<int> want, int cap) {
    OracleCheck c{name, true, ""};
    if (want) {
      c.agree = got == *want;
      c.detail = fmt::format("{} vs oracle {}", got, *want);
    } else {
      c.agree = got > cap;
      c.detail = fmt::format("{} vs oracle > {}", got, cap);
    }
    checks.push_back(c);
  };
  constexpr int kCap = 3;
  compare_int("edge connectivity (directed)", edge_connectivity_directed(eps),
              oracle::brute_edge_connectivity_directed(eps, kCap), kCap);
  compare_int("edge connectivity (undirected)", edge_connectivity_undirected(eps),
              oracle::brute_edge_connectivity_undirected(eps, kCap), kCap);
  compare_int("node connectivity", node_connectivity(eps), oracle::brute_node_connectivity(eps, kCap), kCap);

  const auto clique = max_clique(eps, config.clique);
  const auto brute = oracle::brute_max_clique(eps, config.clique);
  checks.push_back(OracleCheck{"max clique", clique == brute,
                               fmt::format("size {} vs oracle size {}", clique.size(), brute.size())});
  return checks;
}

}  // namespace passnet

#endif  // PASSNET_ANALYSIS_HPP_
