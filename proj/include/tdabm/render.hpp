#ifndef TDABM_RENDER_HPP
#define TDABM_RENDER_HPP

#include "tdabm/graph.hpp"
#include "tdabm/layout.hpp"
#include "tdabm/summary.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tdabm {

struct RenderOptions {
  int width = 800;
  int height = 600;
  bool show_labels = false;
  double min_radius = 4.0;
  double max_radius = 28.0;
  std::string edge_stroke = "#8c8c8c";
  double edge_width = 1.0;
  std::string node_stroke = "#333333";
  double node_stroke_width = 0.75;
  bool legend = true;
  double label_min_font = 7.0;
  std::string background = "#ffffff";
};

/// Disc radius in pixels: area proportional to n_b (radius = max_radius *
/// sqrt(n_b / n_max)), floored at min_radius.
double disc_radius(Index size, Index largest, const RenderOptions& options);

/// TDABM graph as SVG 1.1. Element order: background, edges (line), nodes
/// ascending by id (circle), labels (text), legend (rect/text). No axes.
/// Without a colour scale nodes are grey and no legend is drawn.
std::string render_graph_svg(const MapperGraph& graph, const LayoutPositions& positions,
                             const std::optional<ColorScale>& scale, const RenderOptions& options = {});

/// Pixel geometry of a boxplot; render_boxplot_svg serializes exactly this.
struct BoxGlyph {
  int ball = 0;
  double x = 0.0;  // centre
  double half_width = 0.0;
  double y_min = 0.0, y_q25 = 0.0, y_q50 = 0.0, y_q75 = 0.0, y_max = 0.0; // pixels, top is smaller
};

struct BoxplotGeometry {
  double value_lo = 0.0; // shared y-axis range in data units
  double value_hi = 0.0;
  double plot_top = 0.0;    // pixel row of value_hi
  double plot_bottom = 0.0; // pixel row of value_lo
  double plot_left = 0.0;
  double plot_right = 0.0;
  std::vector<BoxGlyph> glyphs; // ascending ball id

  double to_pixel(double value) const;
};

/// Glyph per ball: whiskers at min/max, box from q25 to q75, bar at median.
/// Rows must satisfy min <= q25 <= q50 <= q75 <= max.
BoxplotGeometry boxplot_geometry(std::span<const DistributionRow> rows, const RenderOptions& options = {});

std::string render_boxplot_svg(std::span<const DistributionRow> rows, const RenderOptions& options = {},
                               const std::string& title = {});

} // namespace tdabm

#endif // TDABM_RENDER_HPP
