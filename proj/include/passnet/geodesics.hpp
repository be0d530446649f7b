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

#ifndef PASSNET_GEODESICS_HPP_
#define PASSNET_GEODESICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "passnet/error.hpp"
#include "passnet/matrix.hpp"
#include "passnet/net_model.hpp"

namespace passnet {

using DistanceMatrix = SquareMatrix<Length>;

inline constexpr double kDefaultTieTolerance = 1e-9;

/// Dense N x N x N tensor of geodesic counts through an interior node.
class ThroughCounts {
 public:
  ThroughCounts() = default;
  explicit ThroughCounts(std::size_t n) : n_(n), data_(n * n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  /// Number of geodesics from `from` to `to` that pass through `via`.
  std::uint64_t& operator()(std::size_t via, std::size_t from, std::size_t to) {
    return data_[(via * n_ + from) * n_ + to];
  }
  std::uint64_t operator()(std::size_t via, std::size_t from, std::size_t to) const {
    return data_[(via * n_ + from) * n_ + to];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> data_;
};

struct PathCountResult {
  DistanceMatrix distance;
  /// geodesic_count(j, k): distinct shortest paths j -> k; 0 when k is
  /// unreachable from j, 1 on the diagonal.
  SquareMatrix<std::uint64_t> geodesic_count;
  ThroughCounts through;

  std::size_t size() const noexcept { return distance.size(); }
};

/// Relative tie rule shared by every geodesic computation.
inline bool lengths_tied(double a, double b, double tie_tol) {
  return std::abs(a - b) <= tie_tol * std::max({a, b, 1.0});
}

namespace detail {

// O(N^2) Dijkstra over a dense length matrix.
inline std::vector<Length> single_source_distances(const LengthMatrix& lengths,
                                                   std::size_t source) {
  const std::size_t n = lengths.size();
  std::vector<Length> dist(n, Length::infinite());
  std::vector<bool> settled(n, false);
  dist[source] = Length(0.0);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!settled[v] && dist[v].is_finite() && (u == n || dist[v] < dist[u])) u = v;
    }
    if (u == n) break;
    settled[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (settled[v] || v == u || lengths(u, v).is_infinite()) continue;
      const Length candidate = dist[u] + lengths(u, v);
      if (candidate < dist[v]) dist[v] = candidate;
    }
  }
  return dist;
}

}  // namespace detail

/// All-pairs weighted shortest paths with geodesic multiplicities.
///
/// Two path lengths a and b are tied when |a - b| <= tie_tol * max(a, b, 1).
/// Through-counts use the product rule: a geodesic j -> k passes through i
/// exactly when d(j,i) + d(i,k) ties d(j,k), and there are g(j,i) * g(i,k)
/// of them.
inline PathCountResult all_pairs_geodesics(const LengthMatrix& lengths,
                                           double tie_tol = kDefaultTieTolerance) {
  if (!(tie_tol >= 0.0)) throw DomainError("tie tolerance must be >= 0");
  const std::size_t n = lengths.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && lengths(i, j).is_finite() && !(lengths(i, j).value() > 0.0))
        throw DomainError("arc lengths must be strictly positive");

  PathCountResult result{DistanceMatrix(n, Length::infinite()),
                         SquareMatrix<std::uint64_t>(n, 0), ThroughCounts(n)};

  std::vector<std::size_t> order(n);
  for (std::size_t source = 0; source < n; ++source) {
    const std::vector<Length> dist = detail::single_source_distances(lengths, source);
    for (std::size_t v = 0; v < n; ++v) result.distance(source, v) = dist[v];

    // Positive arc lengths make every predecessor strictly closer, so
    // visiting in distance order finalizes each count before it is used.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    auto& sigma = result.geodesic_count;
    sigma(source, source) = 1;
    for (std::size_t v : order) {
      if (v == source || dist[v].is_infinite()) continue;
      std::uint64_t count = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || dist[u].is_infinite() || lengths(u, v).is_infinite()) continue;
        if (lengths_tied((dist[u] + lengths(u, v)).value(), dist[v].value(), tie_tol))
          count += sigma(source, u);
      }
      sigma(source, v) = count;
    }
  }

  const auto& d = result.distance;
  const auto& g = result.geodesic_count;
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t from = 0; from < n; ++from) {
      if (from == via || d(from, via).is_infinite()) continue;
      for (std::size_t to = 0; to < n; ++to) {
        if (to == via || to == from || d(via, to).is_infinite() || d(from, to).is_infinite())
          continue;
        if (lengths_tied((d(from, via) + d(via, to)).value(), d(from, to).value(), tie_tol))
          result.through(via, from, to) = g(from, via) * g(via, to);
      }
    }
  }
  return result;
}

inline PathCountResult all_pairs_geodesics(const PassingNetwork& net,
                                           double tie_tol = kDefaultTieTolerance) {
  return all_pairs_geodesics(arrow_lengths(net), tie_tol);
}

}  // namespace passnet

#endif  // PASSNET_GEODESICS_HPP_
