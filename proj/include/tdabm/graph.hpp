#ifndef TDABM_GRAPH_HPP
#define TDABM_GRAPH_HPP

#include "tdabm/cover.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace tdabm {

template <typename Scalar>
struct BasicNode {
  int id = 0;
  Index size = 0;
  std::optional<Scalar> color_mean;
  std::optional<int> color_bin; // 1-based, set by assign_bins
};

/// Overlap between two balls; source < target.
struct Edge {
  int source = 0;
  int target = 0;
  Index shared = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

template <typename Scalar>
struct BasicMapperGraph {
  std::vector<BasicNode<Scalar>> nodes; // nodes[i].id == i + 1
  std::vector<Edge> edges;              // sorted by (source, target)

  bool has_color() const { return !nodes.empty() && nodes.front().color_mean.has_value(); }
};

using Node = BasicNode<double>;
using MapperGraph = BasicMapperGraph<double>;

namespace detail {

template <typename Scalar>
BasicMapperGraph<Scalar> graph_skeleton(const BallCover& cover) {
  BasicMapperGraph<Scalar> graph;
  const auto sizes = ball_sizes(cover);
  for (int id = 1; id <= cover.ball_count(); ++id) {
    graph.nodes.push_back({id, sizes[static_cast<std::size_t>(id - 1)], std::nullopt, std::nullopt});
  }
  // Every point contributes one shared count to each pair of balls holding it.
  std::map<std::pair<int, int>, Index> shared;
  for (const auto& balls : membership_matrix(cover)) {
    for (std::size_t a = 0; a < balls.size(); ++a) {
      for (std::size_t b = a + 1; b < balls.size(); ++b) ++shared[{balls[a], balls[b]}];
    }
  }
  for (const auto& [pair, count] : shared) graph.edges.push_back({pair.first, pair.second, count});
  return graph;
}

} // namespace detail

/// Uncoloured graph: sized nodes and overlap edges.
inline MapperGraph build_graph(const BallCover& cover) { return detail::graph_skeleton<double>(cover); }

/// Graph coloured by the mean of `color` (one value per cloud point) over
/// each ball's members.
template <typename Derived>
BasicMapperGraph<typename Derived::Scalar> build_graph(const BallCover& cover,
                                                       const Eigen::MatrixBase<Derived>& color) {
  using Scalar = typename Derived::Scalar;
  if (color.size() != cover.point_count()) {
    throw ValidationError(ErrorCode::ColorLengthMismatch,
                          "color column has " + std::to_string(color.size()) + " values for " +
                              std::to_string(cover.point_count()) + " points");
  }
  auto graph = detail::graph_skeleton<Scalar>(cover);
  for (auto& node : graph.nodes) {
    Scalar sum(0);
    for (Index p : cover.members(node.id)) sum += color(p);
    node.color_mean = sum / static_cast<Scalar>(node.size);
  }
  return graph;
}

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;

  std::string hex() const;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Linear RGB ramp from blue (low) to red (high), one colour per bin.
std::vector<Rgb> default_palette(int bin_count);

inline constexpr int kDefaultBinCount = 8;

/// Equal-width bins over [lo, hi] of the ball means. The first bin is
/// [lo, b1], later bins (b_{i-1}, b_i]. When lo == hi everything is bin 1.
struct ColorScale {
  int bin_count = kDefaultBinCount;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> boundaries; // bin_count + 1 ascending edges
  std::vector<Rgb> palette;

  int bin_of(double mean) const {
    if (!(hi > lo)) return 1;
    const double t = std::ceil((mean - lo) * bin_count / (hi - lo));
    return std::clamp(static_cast<int>(t), 1, bin_count);
  }
  const Rgb& color_of_bin(int bin) const { return palette.at(static_cast<std::size_t>(bin - 1)); }
};

struct BinnedGraph {
  MapperGraph graph;
  ColorScale scale;
};

/// Bins every node's colour mean; fills `color_bin`. An empty palette means
/// default_palette(bin_count).
BinnedGraph assign_bins(MapperGraph graph, int bin_count = kDefaultBinCount, std::vector<Rgb> palette = {});

/// Components under edge connectivity, each sorted ascending; components are
/// ordered by their smallest ball id.
template <typename Scalar>
std::vector<std::vector<int>> connected_components(const BasicMapperGraph<Scalar>& graph) {
  const std::size_t n = graph.nodes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.edges) {
    auto a = find(static_cast<std::size_t>(e.source - 1));
    auto b = find(static_cast<std::size_t>(e.target - 1));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a; // root stays the smallest index
  }
  std::map<std::size_t, std::vector<int>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(graph.nodes[i].id);
  std::vector<std::vector<int>> components;
  for (auto& [root, ids] : groups) components.push_back(std::move(ids));
  return components;
}

} // namespace tdabm

#endif // TDABM_GRAPH_HPP
