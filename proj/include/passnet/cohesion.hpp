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

#ifndef PASSNET_COHESION_HPP_
#define PASSNET_COHESION_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <string_view>
#include <optional>
#include <vector>

#include "passnet/error.hpp"
#include "passnet/matrix.hpp"
#include "passnet/net_model.hpp"

namespace passnet {

/// Index pattern of the triangle product in the clustering coefficient.
/// `passers` uses A_ij * A_kj * A_ki; `onnela` is the usual transitivity
/// pattern A_ij * A_jk * A_ki.
enum class ClusteringVariant { passers, onnela };

/// How a pair of players counts as linked for clique search: an arrow in
/// either direction, or arrows in both directions.
enum class CliqueProjection { either, both };

inline std::optional<ClusteringVariant> parse_clustering_variant(std::string_view s) {
  if (s == "passers") return ClusteringVariant::passers;
  if (s == "onnela") return ClusteringVariant::onnela;
  return std::nullopt;
}

inline std::string_view to_string(ClusteringVariant v) {
  return v == ClusteringVariant::passers ? "passers" : "onnela";
}

inline std::optional<CliqueProjection> parse_clique_projection(std::string_view s) {
  if (s == "or") return CliqueProjection::either;
  if (s == "and") return CliqueProjection::both;
  return std::nullopt;
}

inline std::string_view to_string(CliqueProjection p) {
  return p == CliqueProjection::either ? "or" : "and";
}

struct ClusteringScores {
  std::vector<double> per_player;
  double team_average = 0.0;
};

/// c_i = 1/(u_i(u_i-1)) * sum_{j != k, both != i} cbrt(triple) / max(A), where
/// u_i is the out-degree of i. Players with u_i < 2 score 0.
///
/// With the `passers` pattern, k ranges over all of i's passers rather than its
/// receivers, so scores above 1 are possible on some networks.
inline ClusteringScores weighted_clustering(const PassingNetwork& net,
                                            ClusteringVariant variant = ClusteringVariant::passers) {
  const std::size_t n = net.size();
  const double max_a = net.max_weight();
  if (!(max_a > 0.0)) throw DomainError("clustering undefined on a network without passes");
  const auto& a = net.weights();

  ClusteringScores out{std::vector<double>(n, 0.0), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t u = 0;
    for (std::size_t j = 0; j < n; ++j) u += a(i, j) != 0.0 ? 1 : 0;
    if (u < 2) continue;
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double middle = variant == ClusteringVariant::passers ? a(k, j) : a(j, k);
        const double product = a(i, j) * middle * a(k, i);
        if (product > 0.0) sum += std::cbrt(product) / max_a;
      }
    }
    out.per_player[i] = sum / (static_cast<double>(u) * static_cast<double>(u - 1));
  }
  double total = 0.0;
  for (double c : out.per_player) total += c;
  out.team_average = n == 0 ? 0.0 : total / static_cast<double>(n);
  return out;
}

/// Undirected projection of eps: either direction (OR) or both (AND).
inline BinaryAdjacency symmetrize(const BinaryAdjacency& eps,
                                  CliqueProjection projection = CliqueProjection::either) {
  const std::size_t n = eps.size();
  BinaryAdjacency out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        const bool fwd = eps(i, j) != 0, back = eps(j, i) != 0;
        out(i, j) = projection == CliqueProjection::either ? (fwd || back) : (fwd && back);
      }
  return out;
}

namespace detail {

using NodeMask = std::uint64_t;

struct CliqueSearch {
  std::vector<NodeMask> neighbours;
  NodeMask best = 0;
  int best_size = 0;

  static std::vector<std::size_t> members(NodeMask m) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; m != 0; ++v, m >>= 1)
      if (m & 1) out.push_back(v);
    return out;
  }

  void offer(NodeMask clique) {
    const int size = std::popcount(clique);
    if (size > best_size ||
        (size == best_size && members(clique) < members(best))) {
      best = clique;
      best_size = size;
    }
  }

  // Bron-Kerbosch with Tomita pivoting. Every maximal clique is reported, so
  // ties between maximum cliques are settled by offer().
  void expand(NodeMask r, NodeMask p, NodeMask x) {
    if (p == 0 && x == 0) {
      offer(r);
      return;
    }
    if (std::popcount(r) + std::popcount(p) < best_size) return;
    NodeMask pivot_nbrs = 0;
    int best_cover = -1;
    for (NodeMask px = p | x; px != 0; px &= px - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(px));
      const int cover = std::popcount(p & neighbours[u]);
      if (cover > best_cover) {
        best_cover = cover;
        pivot_nbrs = neighbours[u];
      }
    }
    for (NodeMask candidates = p & ~pivot_nbrs; candidates != 0; candidates &= candidates - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      const NodeMask bit = NodeMask{1} << v;
      expand(r | bit, p & neighbours[v], x & neighbours[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace detail

/// Largest set of players pairwise linked under the chosen projection. Among
/// several maximum cliques the lexicographically smallest id list wins.
inline std::vector<std::size_t> max_clique(const BinaryAdjacency& eps,
                                           CliqueProjection projection = CliqueProjection::either) {
  const std::size_t n = eps.size();
  if (n > 64) throw DomainError("max_clique supports at most 64 players");
  if (n == 0) return {};
  const BinaryAdjacency adj = symmetrize(eps, projection);
  detail::CliqueSearch search;
  search.neighbours.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj(i, j)) search.neighbours[i] |= detail::NodeMask{1} << j;
  const detail::NodeMask all = n == 64 ? ~detail::NodeMask{0} : (detail::NodeMask{1} << n) - 1;
  search.expand(0, all, 0);
  return detail::CliqueSearch::members(search.best);
}

namespace detail {

/// Edmonds-Karp on an integer capacity matrix. Neighbours are scanned in
/// index order, so the augmenting paths (and the cut) are deterministic.
inline int max_flow(SquareMatrix<int> residual, std::size_t source, std::size_t sink) {
  const std::size_t n = residual.size();
  int flow = 0;
  std::vector<std::size_t> parent(n);
  while (true) {
    std::fill(parent.begin(), parent.end(), n);
    parent[source] = source;
    std::queue<std::size_t> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent[sink] == n) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == n && residual(u, v) > 0) {
          parent[v] = u;
          frontier.push(v);
        }
      }
    }
    if (parent[sink] == n) return flow;
    int bottleneck = std::numeric_limits<int>::max();
    for (std::size_t v = sink; v != source; v = parent[v])
      bottleneck = std::min(bottleneck, residual(parent[v], v));
    for (std::size_t v = sink; v != source; v = parent[v]) {
      residual(parent[v], v) -= bottleneck;
      residual(v, parent[v]) += bottleneck;
    }
    flow += bottleneck;
  }
}

inline void require_two_players(const BinaryAdjacency& eps) {
  if (eps.size() < 2) throw DomainError("connectivity needs at least 2 players");
}

}  // namespace detail

/// Fewest passing lanes whose removal leaves some player unable to reach
/// another. Every global cut separates node 0 from some t in one direction,
/// so min over t of flow(0,t) and flow(t,0) suffices.
inline int edge_connectivity_directed(const BinaryAdjacency& eps) {
  detail::require_two_players(eps);
  const std::size_t n = eps.size();
  SquareMatrix<int> capacity(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && eps(i, j)) capacity(i, j) = 1;
  int best = std::numeric_limits<int>::max();
  for (std::size_t t = 1; t < n; ++t) {
    best = std::min(best, detail::max_flow(capacity, 0, t));
    best = std::min(best, detail::max_flow(capacity, t, 0));
  }
  return best;
}

/// Edge connectivity of the OR-symmetrized graph.
inline int edge_connectivity_undirected(const BinaryAdjacency& eps) {
  detail::require_two_players(eps);
  const std::size_t n = eps.size();
  const BinaryAdjacency sym = symmetrize(eps);
  SquareMatrix<int> capacity(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sym(i, j)) capacity(i, j) = 1;
  int best = std::numeric_limits<int>::max();
  for (std::size_t t = 1; t < n; ++t) best = std::min(best, detail::max_flow(capacity, 0, t));
  return best;
}

/// Fewest players whose removal disconnects the OR-symmetrized graph; N-1
/// for a complete graph. Uses node splitting (v_in = v, v_out = v + N) and
/// a unit-capacity flow between every non-adjacent pair.
inline int node_connectivity(const BinaryAdjacency& eps) {
  detail::require_two_players(eps);
  const std::size_t n = eps.size();
  const BinaryAdjacency sym = symmetrize(eps);
  constexpr int kUnbounded = 1 << 20;
  SquareMatrix<int> capacity(2 * n, 0);
  for (std::size_t v = 0; v < n; ++v) capacity(v, v + n) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sym(i, j)) capacity(i + n, j) = kUnbounded;
  int best = static_cast<int>(n) - 1;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t)
      if (!sym(s, t)) best = std::min(best, detail::max_flow(capacity, s + n, t));
  return best;
}

struct CohesionSummary {
  int edge_connectivity = 0;             ///< k
  int edge_connectivity_undirected = 0;  ///< k_u
  int node_connectivity = 0;
  std::vector<std::size_t> max_clique;
  ClusteringScores clustering;
};

inline CohesionSummary summarize_cohesion(const PassingNetwork& net,
                                          ClusteringVariant variant = ClusteringVariant::passers,
                                          CliqueProjection projection = CliqueProjection::either) {
  const BinaryAdjacency eps = binary_adjacency(net);
  return CohesionSummary{edge_connectivity_directed(eps), edge_connectivity_undirected(eps),
                         node_connectivity(eps), max_clique(eps, projection),
                         weighted_clustering(net, variant)};
}

}  // namespace passnet

#endif  // PASSNET_COHESION_HPP_
