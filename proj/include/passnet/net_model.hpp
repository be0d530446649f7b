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

#ifndef PASSNET_NET_MODEL_HPP_
#define PASSNET_NET_MODEL_HPP_

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "passnet/error.hpp"
#include "passnet/matrix.hpp"

namespace passnet {

enum class Role { goalkeeper, defender, midfielder, forward, unknown };

inline std::string_view to_string(Role role) {
  switch (role) {
    case Role::goalkeeper: return "goalkeeper";
    case Role::defender: return "defender";
    case Role::midfielder: return "midfielder";
    case Role::forward: return "forward";
    case Role::unknown: break;
  }
  return "unknown";
}

inline std::optional<Role> parse_role(std::string_view text) {
  for (Role r : {Role::goalkeeper, Role::defender, Role::midfielder,
                 Role::forward, Role::unknown}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

/// Normalized formation coordinates. x runs from the team's own goal (0) to
/// the opponent's goal (1); y runs from the right touchline (0) to the left
/// touchline (1).
struct PitchPosition {
  double x = 0.5;
  double y = 0.5;

  friend bool operator==(const PitchPosition&, const PitchPosition&) = default;
};

struct Player {
  std::size_t id = 0;
  std::string name;
  Role role = Role::unknown;
  std::optional<PitchPosition> position;

  friend bool operator==(const Player&, const Player&) = default;
};

/// Raw per-tournament input: pass counts summed over all games played.
struct TeamRecord {
  std::string team_name;
  std::vector<Player> players;
  SquareMatrix<std::uint64_t> aggregate_passes;
  std::uint64_t games_played = 1;
};

/// Non-negative extended real used for arrow lengths and geodesic distances.
/// Infinity is a flag, never a large finite stand-in.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(double value) : value_(value) {}

  static constexpr Length infinite() {
    Length l;
    l.finite_ = false;
    return l;
  }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_infinite() const noexcept { return !finite_; }

  /// Only meaningful for finite lengths.
  constexpr double value() const noexcept { return value_; }

  friend constexpr Length operator+(Length a, Length b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Length(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Length a, Length b) {
    if (a.is_infinite() || b.is_infinite()) return a.finite_ == b.finite_;
    return a.value_ == b.value_;
  }

  friend constexpr std::partial_ordering operator<=>(Length a, Length b) {
    if (a.is_infinite() && b.is_infinite()) return std::partial_ordering::equivalent;
    if (a.is_infinite()) return std::partial_ordering::greater;
    if (b.is_infinite()) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
  bool finite_ = true;
};

using LengthMatrix = SquareMatrix<Length>;

/// eps(i, j) is 1 iff player i made at least one pass to player j.
using BinaryAdjacency = SquareMatrix<std::uint8_t>;

/// Weighted directed passing network. Weights are average successful passes
/// per game, so they are generally non-integer.
class PassingNetwork {
 public:
  PassingNetwork() = default;

  /// Throws ValidationError unless weights is square with side
  /// players.size(), has a zero diagonal, and is non-negative and finite.
  PassingNetwork(std::string team_name, std::vector<Player> players,
                 SquareMatrix<double> weights)
      : team_name_(std::move(team_name)),
        players_(std::move(players)),
        weights_(std::move(weights)) {
    const std::size_t n = weights_.size();
    if (players_.size() != n) {
      throw ValidationError("non-square: weight matrix side " +
                            std::to_string(n) + " does not match " +
                            std::to_string(players_.size()) + " players");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (weights_(i, i) != 0.0) {
        throw ValidationError("self-pass: diagonal entry " + std::to_string(i) +
                              " is non-zero");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const double a = weights_(i, j);
        if (!std::isfinite(a) || a < 0.0) {
          throw ValidationError("weight (" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") must be finite and non-negative");
        }
      }
    }
  }

  const std::string& team_name() const noexcept { return team_name_; }
  const std::vector<Player>& players() const noexcept { return players_; }
  const SquareMatrix<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

  double weight(std::size_t from, std::size_t to) const {
    return weights_(from, to);
  }

  /// Total passes made by a player (row sum).
  double out_strength(std::size_t player) const {
    double sum = 0.0;
    for (double a : weights_.row(player)) sum += a;
    return sum;
  }

  /// Team total P: the sum of every entry.
  double total_passes() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < size(); ++i) sum += out_strength(i);
    return sum;
  }

  double max_weight() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
      for (double a : weights_.row(i)) m = std::max(m, a);
    return m;
  }

 private:
  std::string team_name_;
  std::vector<Player> players_;
  SquareMatrix<double> weights_;
};

/// Players named "P0".."P{n-1}" with unknown role and no position.
inline std::vector<Player> anonymous_players(std::size_t n) {
  std::vector<Player> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].id = i;
    out[i].name = "P" + std::to_string(i);
  }
  return out;
}

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& obj,
                                     const std::string& key,
                                     const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field '" + where + key + "'");
  return *it;
}

inline std::int64_t require_int(const nlohmann::json& value,
                                const std::string& field) {
  if (!value.is_number_integer())
    throw ParseError("field '" + field + "' must be an integer");
  return value.get<std::int64_t>();
}

inline double require_unit_coordinate(const nlohmann::json& value,
                                      const std::string& field) {
  if (!value.is_number()) throw ParseError("field '" + field + "' must be a number");
  const double v = value.get<double>();
  if (!(v >= 0.0 && v <= 1.0))
    throw ValidationError("field '" + field + "' must lie in [0,1]");
  return v;
}

}  // namespace detail

/// Reads a fixture document:
///
///   { "team": string, "games": int,
///     "players": [ {"id": int, "name": string, "role": string,
///                   "x": float, "y": float}, ... ],
///     "passes": [[int, ...], ...] }
///
/// Row/column order of "passes" follows the "players" array. "role", "x" and
/// "y" are optional; x and y must appear together.
inline TeamRecord load_team_record(std::istream& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("fixture root must be an object");

  TeamRecord record;
  const auto& team = detail::require(doc, "team", "");
  if (!team.is_string()) throw ParseError("field 'team' must be a string");
  record.team_name = team.get<std::string>();

  const std::int64_t games = detail::require_int(detail::require(doc, "games", ""), "games");
  if (games < 1) throw ValidationError("field 'games' must be >= 1");
  record.games_played = static_cast<std::uint64_t>(games);

  const auto& players = detail::require(doc, "players", "");
  if (!players.is_array()) throw ParseError("field 'players' must be an array");
  const std::size_t n = players.size();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "players[" + std::to_string(i) + "].";
    const auto& p = players[i];
    if (!p.is_object()) throw ParseError("field 'players[" + std::to_string(i) + "]' must be an object");
    Player player;
    const std::int64_t id = detail::require_int(detail::require(p, "id", where), where + "id");
    if (id < 0 || static_cast<std::size_t>(id) >= n || seen[static_cast<std::size_t>(id)])
      throw ValidationError("field '" + where + "id' must be a distinct index in 0.." +
                            std::to_string(n == 0 ? 0 : n - 1));
    seen[static_cast<std::size_t>(id)] = true;
    player.id = static_cast<std::size_t>(id);
    const auto& name = detail::require(p, "name", where);
    if (!name.is_string()) throw ParseError("field '" + where + "name' must be a string");
    player.name = name.get<std::string>();
    if (auto it = p.find("role"); it != p.end()) {
      if (!it->is_string()) throw ParseError("field '" + where + "role' must be a string");
      auto role = parse_role(it->get<std::string>());
      if (!role) throw ParseError("field '" + where + "role' has unknown value '" + it->get<std::string>() + "'");
      player.role = *role;
    }
    const bool has_x = p.contains("x"), has_y = p.contains("y");
    if (has_x != has_y) throw ParseError("field '" + where + (has_x ? "y" : "x") + "' missing");
    if (has_x) {
      player.position = PitchPosition{detail::require_unit_coordinate(p["x"], where + "x"),
                                      detail::require_unit_coordinate(p["y"], where + "y")};
    }
    record.players.push_back(std::move(player));
  }

  const auto& passes = detail::require(doc, "passes", "");
  if (!passes.is_array()) throw ParseError("field 'passes' must be an array");
  if (passes.size() != n)
    throw ValidationError("non-square: 'passes' has " + std::to_string(passes.size()) +
                          " rows for " + std::to_string(n) + " players");
  record.aggregate_passes = SquareMatrix<std::uint64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = passes[i];
    const std::string rname = "passes[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ParseError("field '" + rname + "' must be an array");
    if (row.size() != n)
      throw ValidationError("non-square: '" + rname + "' has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const std::string field = rname + "[" + std::to_string(j) + "]";
      const std::int64_t count = detail::require_int(row[j], field);
      if (count < 0) throw ValidationError("negative pass count in '" + field + "'");
      if (i == j && count != 0) throw ValidationError("self-pass in '" + field + "'");
      record.aggregate_passes(i, j) = static_cast<std::uint64_t>(count);
    }
  }
  return record;
}

inline TeamRecord load_team_record_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open fixture '" + path + "'");
  try {
    return load_team_record(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

/// Divides the aggregate pass counts by the number of games played.
inline PassingNetwork build_network(const TeamRecord& record) {
  const std::size_t n = record.aggregate_passes.size();
  SquareMatrix<double> weights(n);
  const auto games = static_cast<double>(record.games_played);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      weights(i, j) = static_cast<double>(record.aggregate_passes(i, j)) / games;
  return PassingNetwork(record.team_name, record.players, std::move(weights));
}

inline BinaryAdjacency binary_adjacency(const PassingNetwork& net) {
  const std::size_t n = net.size();
  BinaryAdjacency eps(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      eps(i, j) = net.weight(i, j) != 0.0 ? 1 : 0;
  return eps;
}

/// l(i,i) = 0, l(i,j) = 1/A(i,j) for a used passing lane, infinity otherwise.
inline LengthMatrix arrow_lengths(const PassingNetwork& net) {
  const std::size_t n = net.size();
  LengthMatrix l(n, Length::infinite());
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = Length(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && net.weight(i, j) > 0.0) l(i, j) = Length(1.0 / net.weight(i, j));
    }
  }
  return l;
}

}  // namespace passnet

#endif  // PASSNET_NET_MODEL_HPP_
