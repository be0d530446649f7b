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

#ifndef PASSNET_REPORT_HPP_
#define PASSNET_REPORT_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "passnet/centrality.hpp"
#include "passnet/cohesion.hpp"
#include "passnet/net_model.hpp"

namespace passnet {

/// One row of the team comparison table.
struct TeamSummary {
  std::string team;
  double total_passes = 0.0;  ///< P
  int k = 0;
  int k_u = 0;
  double avg_clustering_pct = 0.0;
  double avg_betweenness_pct = 0.0;
  int clique_size = 0;
};

inline TeamSummary team_summary(const PassingNetwork& net, const PlayerScores& scores,
                                const CohesionSummary& cohesion) {
  TeamSummary s;
  s.team = net.team_name();
  s.total_passes = net.total_passes();
  s.k = cohesion.edge_connectivity;
  s.k_u = cohesion.edge_connectivity_undirected;
  s.avg_clustering_pct = 100.0 * cohesion.clustering.team_average;
  double total = 0.0;
  for (double b : scores.betweenness) total += b;
  s.avg_betweenness_pct =
      scores.betweenness.empty() ? 0.0 : 100.0 * total / static_cast<double>(scores.betweenness.size());
  s.clique_size = static_cast<int>(cohesion.max_clique.size());
  return s;
}

/// Scores in table order: closeness, betweenness (%), pagerank,
/// clustering (%).
struct PlayerScoreRow {
  std::string player;
  double closeness = 0.0;
  double betweenness_pct = 0.0;
  double pagerank = 0.0;
  double clustering_pct = 0.0;
};

inline std::vector<PlayerScoreRow> player_table(const PassingNetwork& net, const PlayerScores& scores,
                                                const ClusteringScores& clustering) {
  std::vector<PlayerScoreRow> rows;
  rows.reserve(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    rows.push_back(PlayerScoreRow{net.players()[i].name, scores.closeness[i],
                                  100.0 * scores.betweenness[i], scores.pagerank[i],
                                  100.0 * clustering.per_player[i]});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// CSV

namespace csv {

inline std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += escape(fields[i]);
  }
  line += '\n';
  return line;
}

/// Parses CSV text into records. Lines starting with '#' outside quotes are
/// provenance comments and are skipped.
inline std::vector<std::vector<std::string>> parse(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '#') {
      const auto eol = text.find('\n', pos);
      pos = eol == std::string_view::npos ? text.size() : eol + 1;
      continue;
    }
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (quoted) {
        if (c == '"' && pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          ++pos;
        } else if (c == '"') {
          quoted = false;
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        record.push_back(std::move(field));
        field.clear();
      } else if (c == '\n') {
        ++pos;
        break;
      } else if (c != '\r') {
        field += c;
      }
    }
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace csv

inline constexpr std::string_view kSummaryHeader = "Team,P,k,k_u,clustering,betweenness,clique";
inline constexpr std::string_view kPlayerHeader = "Player,closeness,betweenness,pagerank,clustering";

/// P is printed with one decimal, dropping a trailing ".0" so whole-number
/// totals read like the reference table ("417").
inline std::string format_total_passes(double p) {
  std::string s = fmt::format("{:.1f}", p);
  if (s.size() > 2 && s.ends_with(".0")) s.resize(s.size() - 2);
  if (s == "-0") s = "0";
  return s;
}

inline std::vector<std::string> summary_fields(const TeamSummary& s) {
  return {s.team,
          format_total_passes(s.total_passes),
          std::to_string(s.k),
          std::to_string(s.k_u),
          fmt::format("{:.1f}", s.avg_clustering_pct),
          fmt::format("{:.1f}", s.avg_betweenness_pct),
          std::to_string(s.clique_size)};
}

/// Header plus one line per team, in the given order. A non-empty
/// `provenance` string is written first as a '#' comment line.
inline std::string export_csv(const std::vector<TeamSummary>& rows, std::string_view provenance = {}) {
  std::string out;
  if (!provenance.empty()) out += fmt::format("# {}\n", provenance);
  out += kSummaryHeader;
  out += '\n';
  for (const auto& row : rows) out += csv::join(summary_fields(row));
  return out;
}

inline std::string export_csv(const TeamSummary& row, std::string_view provenance = {}) {
  return export_csv(std::vector<TeamSummary>{row}, provenance);
}

namespace detail {

// Top-two marking works on printed values, so cells that look equal are
// marked together. All cells tied with the second-highest value are marked.
inline std::vector<bool> top_two(const std::vector<std::string>& printed) {
  std::vector<double> values;
  for (const auto& s : printed) {
    double v = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    values.push_back(v);
  }
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<bool> marked(values.size(), false);
  if (sorted.empty()) return marked;
  const double threshold = sorted[std::min<std::size_t>(1, sorted.size() - 1)];
  for (std::size_t i = 0; i < values.size(); ++i) marked[i] = values[i] >= threshold;
  return marked;
}

}  // namespace detail

inline constexpr std::string_view kTopTwoMarker = "*";

/// Player table as CSV. Every score is printed with two decimals; the top
/// two cells of each column carry a trailing '*'.
inline std::string export_csv(const std::vector<PlayerScoreRow>& rows, std::string_view provenance = {}) {
  std::vector<std::vector<std::string>> columns(4);
  for (const auto& r : rows) {
    columns[0].push_back(fmt::format("{:.2f}", r.closeness));
    columns[1].push_back(fmt::format("{:.2f}", r.betweenness_pct));
    columns[2].push_back(fmt::format("{:.2f}", r.pagerank));
    columns[3].push_back(fmt::format("{:.2f}", r.clustering_pct));
  }
  std::vector<std::vector<bool>> marks;
  for (const auto& col : columns) marks.push_back(detail::top_two(col));

  std::string out;
  if (!provenance.empty()) out += fmt::format("# {}\n", provenance);
  out += kPlayerHeader;
  out += '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> fields{rows[i].player};
    for (std::size_t c = 0; c < columns.size(); ++c)
      fields.push_back(columns[c][i] + (marks[c][i] ? std::string(kTopTwoMarker) : ""));
    out += csv::join(fields);
  }
  return out;
}

}  // namespace passnet

#endif  // PASSNET_REPORT_HPP_
