#include "tdabm/render.hpp"

#include "tdabm/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tdabm {

namespace {

// Fixed two-decimal pixel coordinates keep the output byte-stable.
std::string px(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string short_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape_xml(std::string_view text) {
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

void open_svg(std::ostringstream& svg, const RenderOptions& o) {
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width << "\" height=\""
      << o.height << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << o.width << "\" height=\"" << o.height << "\" fill=\""
      << o.background << "\"/>\n";
}

void check_options(const RenderOptions& o) {
  if (!(o.min_radius > 0) || o.max_radius < o.min_radius || o.width <= 0 || o.height <= 0) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "render options need 0 < min_radius <= max_radius and a positive canvas");
  }
}

} // namespace

double disc_radius(Index size, Index largest, const RenderOptions& options) {
  if (largest <= 0) return options.min_radius;
  const double r = options.max_radius * std::sqrt(static_cast<double>(size) / static_cast<double>(largest));
  return std::max(r, options.min_radius);
}

std::string render_graph_svg(const MapperGraph& graph, const LayoutPositions& positions,
                             const std::optional<ColorScale>& scale, const RenderOptions& options) {
  check_options(options);
  const auto n = static_cast<Index>(graph.nodes.size());
  if (positions.xy.rows() != n) {
    throw ValidationError(ErrorCode::DimensionMismatch, "layout has " + std::to_string(positions.xy.rows()) +
                                                            " positions for " + std::to_string(n) + " nodes");
  }

  const bool with_legend = options.legend && scale.has_value();
  const double legend_width = with_legend ? 170.0 : 0.0;
  const double margin = options.max_radius + 8.0;
  const double left = margin;
  const double right = std::max(left, options.width - margin - legend_width);
  const double top = margin;
  const double bottom = std::max(top, options.height - margin);

  Index largest = 0;
  for (const auto& node : graph.nodes) largest = std::max(largest, node.size);

  auto place = [&](double v, int axis, double lo_px, double hi_px) {
    const double lo = positions.min(axis);
    const double hi = positions.max(axis);
    const double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    return lo_px + t * (hi_px - lo_px);
  };
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = place(positions.xy(i, 0), 0, left, right);
    ys[static_cast<std::size_t>(i)] = place(positions.xy(i, 1), 1, bottom, top);
  }

  std::ostringstream svg;
  open_svg(svg, options);

  svg << "  <g id=\"edges\" stroke=\"" << options.edge_stroke << "\" stroke-width=\"" << px(options.edge_width)
      << "\">\n";
  for (const auto& e : graph.edges) {
    const auto s = static_cast<std::size_t>(e.source - 1);
    const auto t = static_cast<std::size_t>(e.target - 1);
    svg << "    <line x1=\"" << px(xs[s]) << "\" y1=\"" << px(ys[s]) << "\" x2=\"" << px(xs[t]) << "\" y2=\""
        << px(ys[t]) << "\"/>\n";
  }
  svg << "  </g>\n";

  std::vector<double> radii;
  svg << "  <g id=\"nodes\" stroke=\"" << options.node_stroke << "\" stroke-width=\""
      << px(options.node_stroke_width) << "\">\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    const double r = disc_radius(node.size, largest, options);
    radii.push_back(r);
    std::string fill = "#bdbdbd";
    if (scale && node.color_bin) fill = scale->color_of_bin(*node.color_bin).hex();
    svg << "    <circle id=\"ball-" << node.id << "\" cx=\"" << px(xs[i]) << "\" cy=\"" << px(ys[i])
        << "\" r=\"" << px(r) << "\" fill=\"" << fill << "\"/>\n";
  }
  svg << "  </g>\n";

  if (options.show_labels) {
    svg << "  <g id=\"labels\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\" "
           "fill=\"#000000\">\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
      const double font = std::max(options.label_min_font, radii[i] * 0.9);
      svg << "    <text x=\"" << px(xs[i]) << "\" y=\"" << px(ys[i]) << "\" font-size=\"" << px(font) << "\">"
          << graph.nodes[i].id << "</text>\n";
    }
    svg << "  </g>\n";
  }

  if (with_legend) {
    const double x0 = options.width - legend_width + 10.0;
    double y = top;
    svg << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"11.00\" fill=\"#000000\">\n"
        << "    <text x=\"" << px(x0) << "\" y=\"" << px(y) << "\">mean colour</text>\n";
    y += 8.0;
    const int rows = scale->hi > scale->lo ? scale->bin_count : 1;
    for (int b = rows; b >= 1; --b) {
      const auto idx = static_cast<std::size_t>(b);
      const std::string label = rows == 1 ? short_number(scale->lo)
                                          : short_number(scale->boundaries[idx - 1]) + " to " +
                                                short_number(scale->boundaries[idx]);
      svg << "    <rect x=\"" << px(x0) << "\" y=\"" << px(y) << "\" width=\"14.00\" height=\"14.00\" fill=\""
          << scale->color_of_bin(b).hex() << "\" stroke=\"#333333\" stroke-width=\"0.50\"/>\n"
          << "    <text x=\"" << px(x0 + 20.0) << "\" y=\"" << px(y + 11.0) << "\">" << escape_xml(label)
          << "</text>\n";
      y += 18.0;
    }
    svg << "  </g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

double BoxplotGeometry::to_pixel(double value) const {
  if (!(value_hi > value_lo)) return (plot_top + plot_bottom) / 2.0;
  return plot_bottom - (value - value_lo) / (value_hi - value_lo) * (plot_bottom - plot_top);
}

BoxplotGeometry boxplot_geometry(std::span<const DistributionRow> rows, const RenderOptions& options) {
  check_options(options);
  if (rows.empty()) throw ValidationError(ErrorCode::InvalidArgument, "boxplot needs at least one ball");
  for (const auto& r : rows) {
    const double v[] = {r.min, r.q25, r.q50, r.q75, r.max};
    for (double x : v) {
      if (!std::isfinite(x)) {
        throw ValidationError(ErrorCode::MalformedInput, "ball " + std::to_string(r.ball) + " is missing quantiles");
      }
    }
    if (!(r.min <= r.q25 && r.q25 <= r.q50 && r.q50 <= r.q75 && r.q75 <= r.max)) {
      throw ValidationError(ErrorCode::MalformedInput,
                            "ball " + std::to_string(r.ball) + " quantiles are not ordered");
    }
  }

  std::vector<DistributionRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.ball < b.ball; });

  BoxplotGeometry g;
  g.plot_left = 64.0;
  g.plot_right = std::max(g.plot_left + 1.0, options.width - 20.0);
  g.plot_top = 36.0;
  g.plot_bottom = std::max(g.plot_top + 1.0, options.height - 44.0);
  g.value_lo = sorted.front().min;
  g.value_hi = sorted.front().max;
  for (const auto& r : sorted) {
    g.value_lo = std::min(g.value_lo, r.min);
    g.value_hi = std::max(g.value_hi, r.max);
  }

  const double slot = (g.plot_right - g.plot_left) / static_cast<double>(sorted.size());
  const double half = std::min(slot * 0.3, 18.0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& r = sorted[i];
    g.glyphs.push_back({r.ball, g.plot_left + (static_cast<double>(i) + 0.5) * slot, half, g.to_pixel(r.min),
                        g.to_pixel(r.q25), g.to_pixel(r.q50), g.to_pixel(r.q75), g.to_pixel(r.max)});
  }
  return g;
}

std::string render_boxplot_svg(std::span<const DistributionRow> rows, const RenderOptions& options,
                               const std::string& title) {
  const auto g = boxplot_geometry(rows, options);
  std::ostringstream svg;
  open_svg(svg, options);

  if (!title.empty()) {
    svg << "  <text x=\"" << px(options.width / 2.0) << "\" y=\"20.00\" font-family=\"sans-serif\" "
        << "font-size=\"14.00\" text-anchor=\"middle\">" << escape_xml(title) << "</text>\n";
  }

  // Shared value axis with five ticks.
  svg << "  <g id=\"axis\" stroke=\"#000000\" stroke-width=\"1.00\" font-family=\"sans-serif\" "
         "font-size=\"10.00\">\n"
      << "    <path d=\"M" << px(g.plot_left) << ' ' << px(g.plot_top) << " V" << px(g.plot_bottom) << " H"
      << px(g.plot_right) << "\" fill=\"none\"/>\n";
  const int ticks = g.value_hi > g.value_lo ? 5 : 1;
  for (int t = 0; t < ticks; ++t) {
    const double v = ticks == 1 ? g.value_lo : g.value_lo + (g.value_hi - g.value_lo) * t / (ticks - 1);
    const double y = g.to_pixel(v);
    svg << "    <path d=\"M" << px(g.plot_left - 5.0) << ' ' << px(y) << " H" << px(g.plot_left) << "\"/>\n"
        << "    <text x=\"" << px(g.plot_left - 8.0) << "\" y=\"" << px(y + 3.5)
        << "\" stroke=\"none\" text-anchor=\"end\">" << short_number(v) << "</text>\n";
  }
  for (const auto& b : g.glyphs) {
    svg << "    <text x=\"" << px(b.x) << "\" y=\"" << px(g.plot_bottom + 16.0)
        << "\" stroke=\"none\" text-anchor=\"middle\">" << b.ball << "</text>\n";
  }
  svg << "    <text x=\"" << px((g.plot_left + g.plot_right) / 2.0) << "\" y=\"" << px(g.plot_bottom + 34.0)
      << "\" stroke=\"none\" text-anchor=\"middle\">ball</text>\n"
      << "  </g>\n";

  svg << "  <g id=\"boxes\" stroke=\"#1f3b73\" stroke-width=\"1.00\">\n";
  for (const auto& b : g.glyphs) {
    const double cap = b.half_width * 0.5;
    svg << "    <g id=\"box-" << b.ball << "\">\n"
        << "      <path d=\"M" << px(b.x) << ' ' << px(b.y_max) << " V" << px(b.y_q75) << " M" << px(b.x) << ' '
        << px(b.y_q25) << " V" << px(b.y_min) << "\"/>\n"
        << "      <path d=\"M" << px(b.x - cap) << ' ' << px(b.y_max) << " H" << px(b.x + cap) << " M"
        << px(b.x - cap) << ' ' << px(b.y_min) << " H" << px(b.x + cap) << "\"/>\n"
        << "      <rect x=\"" << px(b.x - b.half_width) << "\" y=\"" << px(b.y_q75) << "\" width=\""
        << px(2.0 * b.half_width) << "\" height=\"" << px(b.y_q25 - b.y_q75) << "\" fill=\"#9ab3e0\"/>\n"
        << "      <path d=\"M" << px(b.x - b.half_width) << ' ' << px(b.y_q50) << " H" << px(b.x + b.half_width)
        << "\" stroke-width=\"2.00\"/>\n"
        << "    </g>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

} // namespace tdabm
