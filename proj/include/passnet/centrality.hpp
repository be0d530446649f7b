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

#ifndef PASSNET_CENTRALITY_HPP_
#define PASSNET_CENTRALITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "passnet/error.hpp"
#include "passnet/geodesics.hpp"
#include "passnet/net_model.hpp"

namespace passnet {

/// Closeness: C_i = 2(N-1) / (sum_j d(i,j) + sum_j d(j,i)).
/// For an 11-player team the numerator is 20. A player with any infinite
/// distance to or from a teammate scores 0.
inline std::vector<double> closeness(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n < 2) throw DomainError("closeness needs at least 2 players");
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Length out_sum(0.0), in_sum(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      out_sum = out_sum + d(i, j);
      in_sum = in_sum + d(j, i);
    }
    const Length total = out_sum + in_sum;
    if (total.is_finite()) out[i] = 2.0 * static_cast<double>(n - 1) / total.value();
  }
  return out;
}

/// Weighted closeness: C'_i = (N-1) / (w * out_sum + (1-w) * in_sum).
/// An infinite sum only zeroes the score when its coefficient is non-zero.
inline std::vector<double> closeness_weighted(const DistanceMatrix& d, double w) {
  const std::size_t n = d.size();
  if (n < 2) throw DomainError("closeness needs at least 2 players");
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("closeness weight must lie in [0,1]");
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Length out_sum(0.0), in_sum(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      out_sum = out_sum + d(i, j);
      in_sum = in_sum + d(j, i);
    }
    if ((w > 0.0 && out_sum.is_infinite()) || (w < 1.0 && in_sum.is_infinite())) continue;
    double denom = 0.0;
    if (w > 0.0) denom += w * out_sum.value();
    if (w < 1.0) denom += (1.0 - w) * in_sum.value();
    if (denom > 0.0) out[i] = static_cast<double>(n - 1) / denom;
  }
  return out;
}

/// Betweenness: C_B(i) = 1/((N-1)(N-2)) * sum over ordered pairs (j,k) of
/// n^i_jk / g_jk, skipping pairs with no geodesic. The factor is 1/90 for
/// N = 11 and keeps every score in [0,1].
inline std::vector<double> betweenness(const PathCountResult& pc) {
  const std::size_t n = pc.size();
  if (n < 3) throw DomainError("betweenness needs at least 3 players");
  const double norm = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto g = pc.geodesic_count(j, k);
        if (g == 0) continue;
        sum += static_cast<double>(pc.through(i, j, k)) / static_cast<double>(g);
      }
    }
    out[i] = norm * sum;
  }
  return out;
}

struct PagerankParams {
  double p = 0.85;  ///< probability of passing the ball on
  double q = 1.0;   ///< free popularity awarded to every player
  double tol = 1e-9;
  int max_iter = 10000;
};

/// One application of the update x_i <- p * sum_{j != i} A_ji / L_j * x_j + q.
/// Players who never pass (L_j = 0) contribute nothing.
inline std::vector<double> pagerank_step(const PassingNetwork& net, const PagerankParams& params,
                                         const std::vector<double>& x) {
  const std::size_t n = net.size();
  std::vector<double> next(n, params.q);
  for (std::size_t j = 0; j < n; ++j) {
    const double out = net.out_strength(j);
    if (out == 0.0) continue;
    const double share = params.p * x[j] / out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) next[i] += share * net.weight(j, i);
    }
  }
  return next;
}

/// Fixed-point iteration from x = (q, ..., q). Returns the first iterate
/// whose next update moves no score by more than params.tol, so the
/// returned vector satisfies |x - F(x)|_inf <= tol. The update is a
/// contraction with factor p in the l1 norm, so p < 1 guarantees
/// convergence.
inline std::vector<double> pagerank(const PassingNetwork& net, const PagerankParams& params = {}) {
  if (!(params.p >= 0.0 && params.p < 1.0)) throw DomainError("pagerank p must lie in [0,1)");
  if (!(params.q > 0.0)) throw DomainError("pagerank q must be positive");
  if (!(params.tol > 0.0)) throw DomainError("pagerank tol must be positive");
  if (params.max_iter < 1) throw DomainError("pagerank max_iter must be positive");

  std::vector<double> x(net.size(), params.q);
  double residual = 0.0;
  for (int iter = 0; iter < params.max_iter; ++iter) {
    const std::vector<double> next = pagerank_step(net, params, x);
    residual = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      residual = std::max(residual, std::abs(next[i] - x[i]));
    if (residual <= params.tol) return x;
    x = next;
  }
  throw ConvergenceError("pagerank did not converge in " + std::to_string(params.max_iter) +
                             " iterations (last residual " + std::to_string(residual) + ")",
                         residual);
}

struct PlayerScores {
  std::vector<double> closeness;
  std::vector<double> closeness_weighted;
  std::vector<double> betweenness;
  std::vector<double> pagerank;
};

inline PlayerScores score_players(const PassingNetwork& net, const PathCountResult& pc,
                                  double closeness_weight = 0.5,
                                  const PagerankParams& params = {}) {
  return PlayerScores{closeness(pc.distance), closeness_weighted(pc.distance, closeness_weight),
                      betweenness(pc), pagerank(net, params)};
}

}  // namespace passnet

#endif  // PASSNET_CENTRALITY_HPP_
