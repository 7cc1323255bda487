#include "tdabm/graph.hpp"

#include <cmath>
#include <cstdio>

namespace tdabm {

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::vector<Rgb> default_palette(int bin_count) {
  constexpr Rgb low{0x2C, 0x4F, 0xD8};
  constexpr Rgb high{0xD8, 0x2C, 0x2C};
  auto lerp = [](std::uint8_t a, std::uint8_t b, double t) {
    return static_cast<std::uint8_t>(std::lround(a + (static_cast<double>(b) - a) * t));
  };
  std::vector<Rgb> palette;
  for (int i = 0; i < bin_count; ++i) {
    const double t = bin_count > 1 ? static_cast<double>(i) / (bin_count - 1) : 0.0;
    palette.push_back({lerp(low.r, high.r, t), lerp(low.g, high.g, t), lerp(low.b, high.b, t)});
  }
  return palette;
}

BinnedGraph assign_bins(MapperGraph graph, int bin_count, std::vector<Rgb> palette) {
  if (bin_count < 1) throw ValidationError(ErrorCode::InvalidArgument, "bin count must be at least 1");
  if (!graph.has_color()) throw ValidationError(ErrorCode::InvalidArgument, "graph has no colour means to bin");
  if (palette.empty()) palette = default_palette(bin_count);
  if (static_cast<int>(palette.size()) != bin_count) {
    throw ValidationError(ErrorCode::InvalidArgument, "palette needs one colour per bin");
  }

  ColorScale scale;
  scale.bin_count = bin_count;
  scale.palette = std::move(palette);
  scale.lo = *graph.nodes.front().color_mean;
  scale.hi = scale.lo;
  for (const auto& node : graph.nodes) {
    scale.lo = std::min(scale.lo, *node.color_mean);
    scale.hi = std::max(scale.hi, *node.color_mean);
  }
  for (int i = 0; i <= bin_count; ++i) {
    scale.boundaries.push_back(i == bin_count ? scale.hi : scale.lo + (scale.hi - scale.lo) * i / bin_count);
  }
  for (auto& node : graph.nodes) node.color_bin = scale.bin_of(*node.color_mean);
  return {std::move(graph), std::move(scale)};
}

} // namespace tdabm
