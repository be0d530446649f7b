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

// Network builders shared by the test suites.

#ifndef PASSNET_TESTS_TEST_SUPPORT_HPP_
#define PASSNET_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "passnet/net_model.hpp"

namespace passnet::testing {

inline const std::string kSourceDir = PASSNET_SOURCE_DIR;

inline std::string source_path(const std::string& relative) { return kSourceDir + "/" + relative; }

/// Anonymous players spread on a circle so they can also be rendered.
inline std::vector<Player> circle_players(std::size_t n) {
  auto players = anonymous_players(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    players[i].position = PitchPosition{0.5 + 0.4 * std::cos(angle), 0.5 + 0.4 * std::sin(angle)};
  }
  return players;
}

inline PassingNetwork network(const std::vector<std::vector<double>>& rows, const std::string& name = "test") {
  const std::size_t n = rows.size();
  SquareMatrix<double> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  return PassingNetwork(name, circle_players(n), std::move(a));
}

/// 0->1 weight 4, 1->2 weight 2, 0->2 weight 1.
inline PassingNetwork chain3() { return network({{0, 4, 1}, {0, 0, 2}, {0, 0, 0}}, "Chain3"); }

/// 0->1, 0->2, 1->3, 2->3, all weight 2.
inline PassingNetwork diamond() {
  return network({{0, 2, 2, 0}, {0, 0, 0, 2}, {0, 0, 0, 2}, {0, 0, 0, 0}}, "Diamond");
}

inline PassingNetwork directed_cycle(std::size_t n, double w) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) rows[i][(i + 1) % n] = w;
  return network(rows, "cycle");
}

inline PassingNetwork undirected_cycle(std::size_t n, double w) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][(i + 1) % n] = w;
    rows[(i + 1) % n][i] = w;
  }
  return network(rows, "ring");
}

inline PassingNetwork complete(std::size_t n, double w) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, w));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 0.0;
  return network(rows, "complete");
}

/// Centre 0 passes to every leaf; leaves never pass.
inline PassingNetwork star(std::size_t n, double w = 1.0) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 1; i < n; ++i) rows[0][i] = w;
  return network(rows, "star");
}

inline TeamRecord record_from_counts(const std::vector<std::vector<std::uint64_t>>& counts,
                                     std::uint64_t games = 1) {
  TeamRecord r;
  r.team_name = "random";
  r.players = circle_players(counts.size());
  r.aggregate_passes = SquareMatrix<std::uint64_t>(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j < counts.size(); ++j) r.aggregate_passes(i, j) = counts[i][j];
  r.games_played = games;
  return r;
}

/// Random digraph: each ordered pair is an arc with probability `edge_prob`
/// and integer weight uniform in [lo, hi].
inline TeamRecord random_record(std::mt19937_64& rng, std::size_t n, double edge_prob = 0.5, int lo = 1,
                                int hi = 5, std::uint64_t games = 1) {
  std::bernoulli_distribution arc(edge_prob);
  std::uniform_int_distribution<int> weight(lo, hi);
  std::vector<std::vector<std::uint64_t>> counts(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && arc(rng)) counts[i][j] = static_cast<std::uint64_t>(weight(rng));
  return record_from_counts(counts, games);
}

inline PassingNetwork scaled(const PassingNetwork& net, double c) {
  SquareMatrix<double> a = net.weights();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a(i, j) *= c;
  return PassingNetwork(net.team_name(), net.players(), std::move(a));
}

}  // namespace passnet::testing

#endif  // PASSNET_TESTS_TEST_SUPPORT_HPP_
