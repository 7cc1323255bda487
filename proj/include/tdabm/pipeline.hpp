#ifndef TDABM_PIPELINE_HPP
#define TDABM_PIPELINE_HPP

#include "tdabm/cover.hpp"
#include "tdabm/graph.hpp"
#include "tdabm/layout.hpp"
#include "tdabm/point_cloud.hpp"
#include "tdabm/render.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tdabm {

struct RunConfig {
  std::filesystem::path input;
  char delimiter = ',';
  std::vector<std::string> axes;
  std::optional<std::string> color;
  double epsilon = 0.0;
  LayoutParams layout;
  int bins = kDefaultBinCount;
  bool labels = false;
  bool standardize = false;
  bool drop_missing = false;
  std::optional<std::string> id_column;
  LandmarkOrder order;
  std::filesystem::path svg = "ballmapper.svg";
  std::filesystem::path results = "bm_results.csv";
  std::filesystem::path merged = "bm_merged.csv";
  RenderOptions render;
};

/// Everything a run computed, for callers that want more than the files.
struct RunResult {
  Table input;
  ValidatedData data; // after optional standardization
  std::optional<Standardization> standardization;
  BallCover cover;
  MapperGraph graph;
  std::optional<ColorScale> scale;
  LayoutPositions layout;
  Table results;
  Table merged;
  std::string svg;
};

/// Pure part of a run: validate, standardize, cover, graph, layout, render.
RunResult execute_run(const RunConfig& config);

/// BM_RESULTS as a table: node rows then edge rows, header
/// `type,ball,x,y,size,color_mean,color_bin,source,target,x2,y2,shared`.
Table results_table(const MapperGraph& graph, const LayoutPositions& layout);

/// BM_MERGED as a table: one row per (point, ball) pair, header
/// `ball,row,<input columns>`, sorted by ball then row.
Table merged_table(const BallCover& cover, const Table& input, const std::optional<std::string>& id_column = {});

/// execute_run plus writing the SVG, results and merged files; prints a
/// report to `out`.
RunResult cmd_run(const RunConfig& config, std::ostream& out);

void cmd_ball_summary(const std::filesystem::path& merged, const std::vector<std::string>& variables,
                      const std::filesystem::path& out_csv);

void cmd_variable_summary(const std::filesystem::path& merged, const std::string& variable,
                          const std::filesystem::path& out_csv,
                          const std::optional<std::filesystem::path>& boxplot_svg = {});

struct GenConfig {
  std::string dataset; // "gauss" or "x"
  std::uint64_t seed = 1;
  int n = 1000;
  int k = 2;
  std::filesystem::path out;
};

void cmd_gen(const GenConfig& config);

/// Summary statistics and correlation matrix of numeric columns.
void cmd_describe(const std::filesystem::path& input, const std::vector<std::string>& columns,
                  const std::optional<std::filesystem::path>& out_csv,
                  const std::optional<std::filesystem::path>& correlation_csv, std::ostream& out);

/// 1 for validation errors, 2 for I/O errors.
int exit_code_for(const Error& error);

} // namespace tdabm

#endif // TDABM_PIPELINE_HPP
