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

#ifndef PASSNET_CLI_HPP_
#define PASSNET_CLI_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "passnet/analysis.hpp"

namespace passnet::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kBadArguments = 2, kOracleMismatch = 3 };

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << bytes;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

inline PassingNetwork load_network(const std::string& path) {
  return build_network(load_team_record_file(path));
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Passing-network analysis for football teams", "passnet"};
  app.require_subcommand(1);
  app.fallthrough();

  AnalysisConfig config;
  std::string clustering = "passers", projection = "or";
  app.add_option("--p", config.pagerank.p, "pagerank pass-on probability")->capture_default_str();
  app.add_option("--q", config.pagerank.q, "pagerank free popularity")->capture_default_str();
  app.add_option("--tol", config.pagerank.tol, "pagerank convergence tolerance")->capture_default_str();
  app.add_option("--max-iter", config.pagerank.max_iter, "pagerank iteration cap")->capture_default_str();
  app.add_option("-w,--closeness-weight", config.closeness_weight, "outgoing weight w of C'_i")
      ->capture_default_str();
  app.add_option("--tie-tol", config.tie_tol, "relative tie tolerance for geodesics")->capture_default_str();
  app.add_option("--clustering-variant", clustering, "triangle pattern")
      ->check(CLI::IsMember({"passers", "onnela"}))
      ->capture_default_str();
  app.add_option("--clique-projection", projection, "arrow direction rule for cliques")
      ->check(CLI::IsMember({"or", "and"}))
      ->capture_default_str();
  app.add_option("--width", config.render.width, "diagram width (px)")->capture_default_str();
  app.add_option("--height", config.render.height, "diagram height (px)")->capture_default_str();
  app.add_option("--min-stroke", config.render.min_stroke, "thinnest arrow (px)")->capture_default_str();
  app.add_option("--max-stroke", config.render.max_stroke, "thickest arrow (px)")->capture_default_str();
  app.add_option("--low-color", config.render.low_color, "colour of the lightest arrow")->capture_default_str();
  app.add_option("--high-color", config.render.high_color, "colour of the heaviest arrow")
      ->capture_default_str();

  std::string analyze_fixture, analyze_dir = ".";
  auto* analyze_cmd = app.add_subcommand("analyze", "summary CSV, player CSV and pitch diagram");
  analyze_cmd->add_option("fixture", analyze_fixture)->required();
  analyze_cmd->add_option("-o,--output", analyze_dir, "output directory")->capture_default_str();

  std::vector<std::string> summary_fixtures;
  auto* summary_cmd = app.add_subcommand("summary", "one team-summary CSV row per fixture");
  summary_cmd->add_option("fixtures", summary_fixtures)->required();

  std::string render_fixture, render_path;
  auto* render_cmd = app.add_subcommand("render", "pitch diagram only");
  render_cmd->add_option("fixture", render_fixture)->required();
  render_cmd->add_option("-o,--output", render_path, "SVG path (default: <fixture stem>.svg)");

  std::string oracle_fixture;
  auto* oracle_cmd = app.add_subcommand("oracle", "compare against brute-force oracles (N <= 8)");
  oracle_cmd->add_option("fixture", oracle_fixture)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadArguments;
  }
  config.clustering = *parse_clustering_variant(clustering);
  config.clique = *parse_clique_projection(projection);
  const std::string provenance = config.provenance();

  try {
    if (*analyze_cmd) {
      const PassingNetwork net = detail::load_network(analyze_fixture);
      const TeamAnalysis a = analyze(net, config);
      const std::filesystem::path dir(analyze_dir);
      std::filesystem::create_directories(dir);
      const std::string stem = std::filesystem::path(analyze_fixture).stem().string();
      detail::write_file(dir / "summary.csv", export_csv(a.summary, provenance));
      detail::write_file(dir / "players.csv", export_csv(a.players, provenance));
      detail::write_file(dir / (stem + ".svg"), render_pitch_diagram(net, config.render, provenance));
      out << "wrote " << (dir / "summary.csv").string() << ", " << (dir / "players.csv").string() << ", "
          << (dir / (stem + ".svg")).string() << '\n';
    } else if (*summary_cmd) {
      std::vector<TeamSummary> rows;
      for (const auto& path : summary_fixtures) rows.push_back(analyze(detail::load_network(path), config).summary);
      out << export_csv(rows, provenance);
    } else if (*render_cmd) {
      const PassingNetwork net = detail::load_network(render_fixture);
      std::filesystem::path target =
          render_path.empty() ? std::filesystem::path(render_fixture).stem().string() + ".svg" : render_path;
      detail::write_file(target, render_pitch_diagram(net, config.render, provenance));
      out << "wrote " << target.string() << '\n';
    } else if (*oracle_cmd) {
      const TeamRecord record = load_team_record_file(oracle_fixture);
      if (record.aggregate_passes.size() > kOracleMaxPlayers) {
        err << "passnet: oracle checks support at most " << kOracleMaxPlayers << " players; '" << oracle_fixture
            << "' has " << record.aggregate_passes.size() << '\n';
        return kBadArguments;
      }
      const auto checks = check_against_oracles(record, config);
      bool all = true;
      out << "# " << provenance << '\n';
      for (const auto& c : checks) {
        out << (c.agree ? "agree    " : "MISMATCH ") << c.name << ": " << c.detail << '\n';
        all = all && c.agree;
      }
      return all ? kOk : kOracleMismatch;
    }
  } catch (const Error& e) {
    err << "passnet: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "passnet: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

}  // namespace passnet::cli

#endif  // PASSNET_CLI_HPP_
