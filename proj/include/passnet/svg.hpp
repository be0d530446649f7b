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

#ifndef PASSNET_SVG_HPP_
#define PASSNET_SVG_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "passnet/error.hpp"
#include "passnet/net_model.hpp"

namespace passnet {

struct Rgb {
  double r = 0, g = 0, b = 0;
};

/// Parses "#rrggbb".
inline Rgb parse_hex_color(std::string_view hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw DomainError("invalid colour '" + std::string(hex) + "'");
  };
  if (hex.size() != 7 || hex[0] != '#') throw DomainError("invalid colour '" + std::string(hex) + "'");
  auto byte = [&](std::size_t at) { return nibble(hex[at]) * 16 + nibble(hex[at + 1]); };
  return Rgb{double(byte(1)), double(byte(3)), double(byte(5))};
}

struct RenderStyle {
  int width = 1200;
  int height = 800;
  double min_stroke = 1.0;
  double max_stroke = 8.0;
  std::string low_color = "#8c9bb0";   // muted grey-blue
  std::string high_color = "#d7191c";  // saturated red
};

/// Stroke width for an arrow whose weight is `ratio` = A_ij / max(A).
inline double arrow_stroke(const RenderStyle& style, double ratio) {
  return style.min_stroke + ratio * (style.max_stroke - style.min_stroke);
}

inline std::string arrow_color(const RenderStyle& style, double ratio) {
  const Rgb lo = parse_hex_color(style.low_color), hi = parse_hex_color(style.high_color);
  auto mix = [&](double a, double b) { return static_cast<int>(std::lround(a + ratio * (b - a))); };
  return fmt::format("#{:02x}{:02x}{:02x}", mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b));
}

namespace detail {

inline std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Standalone SVG 1.1 pitch diagram. Players sit at their formation
/// coordinates (attacking left to right), every non-zero A_ij becomes a
/// curved arrow bowed to the right of its direction of travel, so the two
/// arrows of a mutual pair never overlap. Output is byte-deterministic.
inline std::string render_pitch_diagram(const PassingNetwork& net, const RenderStyle& style = {},
                                        std::string_view provenance = {}) {
  std::string missing;
  for (const auto& p : net.players()) {
    if (!p.position) missing += (missing.empty() ? "" : ", ") + p.name;
  }
  if (!missing.empty()) throw RenderError("players without a position: " + missing);
  if (style.width <= 0 || style.height <= 0) throw RenderError("canvas must be non-empty");
  if (!(style.min_stroke > 0.0 && style.min_stroke < style.max_stroke))
    throw RenderError("stroke widths must satisfy 0 < min < max");

  const double w = style.width, h = style.height;
  const double margin = std::min(w, h) * 0.05;
  const double left = margin, top = margin, pitch_w = w - 2 * margin, pitch_h = h - 2 * margin;
  const double radius = std::min(pitch_w, pitch_h) * 0.025;

  auto place = [&](const PitchPosition& p) {
    return std::pair{left + p.x * pitch_w, top + (1.0 - p.y) * pitch_h};
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      style.width, style.height, style.width, style.height);
  svg += fmt::format("<title>{}</title>\n", detail::xml_escape(net.team_name()));
  if (!provenance.empty()) svg += fmt::format("<desc>{}</desc>\n", detail::xml_escape(provenance));
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#3a7d44\"/>\n", style.width,
                     style.height);
  svg += fmt::format(
      "<g id=\"pitch\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"2\">\n"
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\"/>\n"
      "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n"
      "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\"/>\n"
      "</g>\n",
      left, top, pitch_w, pitch_h, left + pitch_w / 2, top, left + pitch_w / 2, top + pitch_h,
      left + pitch_w / 2, top + pitch_h / 2, pitch_h * 0.13);

  // Light arrows first so heavy lanes stay on top.
  const double max_a = net.max_weight();
  std::vector<std::tuple<double, std::size_t, std::size_t>> arrows;
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j)
      if (i != j && net.weight(i, j) > 0.0) arrows.emplace_back(net.weight(i, j), i, j);
  std::sort(arrows.begin(), arrows.end());

  svg += "<g id=\"passes\" fill=\"none\" stroke-linecap=\"round\">\n";
  for (const auto& [weight, i, j] : arrows) {
    const double ratio = weight / max_a;
    const double stroke = arrow_stroke(style, ratio);
    const std::string color = arrow_color(style, ratio);
    auto [x1, y1] = place(*net.players()[i].position);
    auto [x2, y2] = place(*net.players()[j].position);
    const double dx = x2 - x1, dy = y2 - y1;
    const double len = std::hypot(dx, dy);
    if (len <= 2 * radius) continue;  // coincident players: nothing sensible to draw
    const double ux = dx / len, uy = dy / len;
    // Screen y points down, so (-uy, ux) is to the right of travel.
    const double nx = -uy, ny = ux;
    const double bow = 0.12 * len;
    const double cx = (x1 + x2) / 2 + nx * bow, cy = (y1 + y2) / 2 + ny * bow;
    auto trim = [&](double px, double py, double tx, double ty, double by) {
      const double l = std::hypot(tx - px, ty - py);
      return std::pair{px + (tx - px) / l * by, py + (ty - py) / l * by};
    };
    auto [sx, sy] = trim(x1, y1, cx, cy, radius);
    auto [ex, ey] = trim(x2, y2, cx, cy, radius);
    // Arrowhead along the curve's end tangent (control point -> end).
    const double tl = std::hypot(ex - cx, ey - cy);
    const double tx = (ex - cx) / tl, ty = (ey - cy) / tl;
    const double head = 6.0 + 1.5 * stroke;
    const double bx = ex - tx * head, by = ey - ty * head;
    auto [lx, ly] = std::pair{bx - ty * head * 0.5, by + tx * head * 0.5};
    auto [rx, ry] = std::pair{bx + ty * head * 0.5, by - tx * head * 0.5};
    svg += fmt::format(
        "<path d=\"M {:.2f} {:.2f} Q {:.2f} {:.2f} {:.2f} {:.2f}\" stroke=\"{}\" stroke-width=\"{:.3f}\" "
        "data-from=\"{}\" data-to=\"{}\" data-weight=\"{:.4f}\"/>\n",
        sx, sy, cx, cy, bx, by, color, stroke, i, j, weight);
    svg += fmt::format(
        "<polygon points=\"{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}\" fill=\"{}\" stroke=\"none\"/>\n", ex,
        ey, lx, ly, rx, ry, color);
  }
  svg += "</g>\n";

  svg += "<g id=\"players\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto& p = net.players()[i];
    auto [x, y] = place(*p.position);
    svg += fmt::format(
        "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" fill=\"#ffffff\" stroke=\"#1b1b1b\" "
        "stroke-width=\"2\"/>\n",
        x, y, radius);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"#ffffff\">{}</text>\n", x,
                       y + radius + 16, detail::xml_escape(p.name));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace passnet

#endif  // PASSNET_SVG_HPP_
