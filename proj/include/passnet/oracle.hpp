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

#ifndef PASSNET_ORACLE_HPP_
#define PASSNET_ORACLE_HPP_

// Brute-force reference implementations. They share no code with the fast
// algorithms: paths are enumerated explicitly and all lengths are exact
// rationals, so ties are decided without any tolerance.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "passnet/cohesion.hpp"
#include "passnet/matrix.hpp"
#include "passnet/net_model.hpp"

namespace passnet::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Exact weights A_ij = passes_ij / games.
inline SquareMatrix<Rational> exact_weights(const TeamRecord& record) {
  const std::size_t n = record.aggregate_passes.size();
  SquareMatrix<Rational> a(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = Rational(record.aggregate_passes(i, j), record.games_played);
  return a;
}

struct EnumeratedGeodesics {
  SquareMatrix<std::optional<Rational>> distance;
  SquareMatrix<std::uint64_t> geodesic_count;
  /// through[(via * n + from) * n + to]
  std::vector<std::uint64_t> through;
  std::size_t n = 0;

  std::uint64_t through_count(std::size_t via, std::size_t from, std::size_t to) const {
    return through[(via * n + from) * n + to];
  }
};

/// Enumerates every simple directed path and keeps, per ordered pair, the
/// minimum exact length, the number of paths achieving it and how often
/// each interior node appears on those paths.
inline EnumeratedGeodesics enumerate_geodesics(const SquareMatrix<Rational>& weights) {
  const std::size_t n = weights.size();
  EnumeratedGeodesics out{SquareMatrix<std::optional<Rational>>(n), SquareMatrix<std::uint64_t>(n, 0),
                          std::vector<std::uint64_t>(n * n * n, 0), n};

  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  auto record = [&](std::size_t from, std::size_t to, const Rational& length) {
    auto& best = out.distance(from, to);
    if (best && length > *best) return;
    if (!best || length < *best) {
      best = length;
      out.geodesic_count(from, to) = 0;
      for (std::size_t via = 0; via < n; ++via) out.through[(via * n + from) * n + to] = 0;
    }
    ++out.geodesic_count(from, to);
    for (std::size_t p = 1; p + 1 < path.size(); ++p) ++out.through[(path[p] * n + from) * n + to];
  };

  auto dfs = [&](auto& self, std::size_t from, std::size_t at, const Rational& length) -> void {
    for (std::size_t next = 0; next < n; ++next) {
      if (on_path[next] || weights(at, next) == 0) continue;
      const Rational extended = length + 1 / weights(at, next);
      path.push_back(next);
      on_path[next] = true;
      record(from, next, extended);
      self(self, from, next, extended);
      on_path[next] = false;
      path.pop_back();
    }
  };

  for (std::size_t from = 0; from < n; ++from) {
    out.distance(from, from) = Rational(0);
    out.geodesic_count(from, from) = 1;
    path.assign(1, from);
    on_path[from] = true;
    dfs(dfs, from, from, Rational(0));
    on_path[from] = false;
  }
  return out;
}

/// Betweenness straight from the enumerated counts, in exact arithmetic.
inline std::vector<Rational> enumerated_betweenness(const EnumeratedGeodesics& geo) {
  const std::size_t n = geo.n;
  std::vector<Rational> out(n, Rational(0));
  if (n < 3) return out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || i == k || j == k || geo.geodesic_count(j, k) == 0) continue;
        out[i] += Rational(geo.through_count(i, j, k), geo.geodesic_count(j, k));
      }
    out[i] /= Rational((n - 1) * (n - 2));
  }
  return out;
}

namespace detail {

inline bool reaches_all(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& alive,
                        std::size_t start, bool reverse) {
  const std::size_t n = adj.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      const bool arc = reverse ? adj[v][u] : adj[u][v];
      if (alive[v] && !seen[v] && arc) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && !seen[v]) return false;
  return true;
}

inline bool strongly_connected(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& alive) {
  std::size_t start = adj.size();
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (alive[v]) {
      start = v;
      break;
    }
  if (start == adj.size()) return true;
  return reaches_all(adj, alive, start, false) && reaches_all(adj, alive, start, true);
}

// Visits every k-subset of {0..m-1}; stops early when visit returns true.
template <typename Visit>
bool any_subset(std::size_t m, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> pick(k);
  auto rec = [&](auto& self, std::size_t depth, std::size_t from) -> bool {
    if (depth == k) return visit(pick);
    for (std::size_t x = from; x + (k - depth) <= m; ++x) {
      pick[depth] = x;
      if (self(self, depth + 1, x + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline std::vector<std::vector<bool>> to_rows(const BinaryAdjacency& eps) {
  std::vector<std::vector<bool>> rows(eps.size(), std::vector<bool>(eps.size(), false));
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = 0; j < eps.size(); ++j) rows[i][j] = i != j && eps(i, j) != 0;
  return rows;
}

inline std::optional<int> edge_deletion_search(std::vector<std::vector<bool>> adj, bool undirected,
                                               int max_removed) {
  const std::size_t n = adj.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j] && (!undirected || i < j)) edges.emplace_back(i, j);
  const std::vector<bool> alive(n, true);
  for (int k = 0; k <= max_removed && static_cast<std::size_t>(k) <= edges.size(); ++k) {
    const bool found = any_subset(edges.size(), static_cast<std::size_t>(k), [&](const auto& pick) {
      for (auto e : pick) {
        adj[edges[e].first][edges[e].second] = false;
        if (undirected) adj[edges[e].second][edges[e].first] = false;
      }
      const bool cut = !strongly_connected(adj, alive);
      for (auto e : pick) {
        adj[edges[e].first][edges[e].second] = true;
        if (undirected) adj[edges[e].second][edges[e].first] = true;
      }
      return cut;
    });
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace detail

/// Smallest number of arcs whose deletion breaks strong connectivity, or
/// nullopt if no deletion of up to `max_removed` arcs does.
inline std::optional<int> brute_edge_connectivity_directed(const BinaryAdjacency& eps, int max_removed = 3) {
  return detail::edge_deletion_search(detail::to_rows(eps), false, max_removed);
}

inline std::optional<int> brute_edge_connectivity_undirected(const BinaryAdjacency& eps,
                                                             int max_removed = 3) {
  auto rows = detail::to_rows(eps);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) rows[i][j] = rows[i][j] || rows[j][i];
  return detail::edge_deletion_search(std::move(rows), true, max_removed);
}

/// Smallest node set whose deletion disconnects the OR-symmetrized graph;
/// N-1 when no set of at most N-2 nodes does. nullopt when the answer
/// exceeds `max_removed` and the search was cut short.
inline std::optional<int> brute_node_connectivity(const BinaryAdjacency& eps, int max_removed = 3) {
  auto rows = detail::to_rows(eps);
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = rows[i][j] || rows[j][i];
  const int limit = std::min(max_removed, static_cast<int>(n) - 2);
  for (int k = 0; k <= limit; ++k) {
    const bool found = detail::any_subset(n, static_cast<std::size_t>(k), [&](const auto& pick) {
      std::vector<bool> alive(n, true);
      for (auto v : pick) alive[v] = false;
      return !detail::strongly_connected(rows, alive);
    });
    if (found) return k;
  }
  if (max_removed >= static_cast<int>(n) - 2) return static_cast<int>(n) - 1;
  return std::nullopt;
}

inline bool linked(const BinaryAdjacency& eps, std::size_t a, std::size_t b, CliqueProjection projection) {
  const bool fwd = eps(a, b) != 0, back = eps(b, a) != 0;
  return projection == CliqueProjection::either ? (fwd || back) : (fwd && back);
}

inline bool is_clique(const BinaryAdjacency& eps, const std::vector<std::size_t>& members,
                      CliqueProjection projection = CliqueProjection::either) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (!linked(eps, members[a], members[b], projection)) return false;
  return true;
}

/// True when no outside player is linked to every member.
inline bool is_maximal_clique(const BinaryAdjacency& eps, const std::vector<std::size_t>& members,
                              CliqueProjection projection = CliqueProjection::either) {
  for (std::size_t v = 0; v < eps.size(); ++v) {
    if (std::find(members.begin(), members.end(), v) != members.end()) continue;
    auto extended = members;
    extended.push_back(v);
    if (is_clique(eps, extended, projection)) return false;
  }
  return true;
}

/// Maximum clique by subset enumeration (N <= ~20); the lexicographically
/// smallest among the largest.
inline std::vector<std::size_t> brute_max_clique(const BinaryAdjacency& eps,
                                                 CliqueProjection projection = CliqueProjection::either) {
  const std::size_t n = eps.size();
  std::vector<std::size_t> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) members.push_back(v);
    if (members.size() < best.size() || !is_clique(eps, members, projection)) continue;
    if (members.size() > best.size() || members < best) best = std::move(members);
  }
  return best;
}

}  // namespace passnet::oracle

#endif  // PASSNET_ORACLE_HPP_
