#include "tdabm/pipeline.hpp"

#include "tdabm/datagen.hpp"
#include "tdabm/summary.hpp"

#include <algorithm>
#include <ostream>

namespace tdabm {

namespace {

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

void check_config(const RunConfig& config, const Table& input) {
  if (!(config.epsilon > 0.0)) throw ValidationError(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  if (config.axes.empty()) throw ValidationError(ErrorCode::InvalidArgument, "at least one axis column is required");
  for (const char* reserved : {"ball", "row"}) {
    if (input.find_column(reserved)) {
      throw ValidationError(ErrorCode::InvalidArgument, std::string("input already has a column named '") +
                                                            reserved + "', which the merged output reserves");
    }
  }
  if (config.id_column) {
    input.column_index(*config.id_column);
    const auto& id = *config.id_column;
    if (std::find(config.axes.begin(), config.axes.end(), id) != config.axes.end() || config.color == id) {
      throw ValidationError(ErrorCode::InvalidArgument, "id column '" + id + "' cannot be an axis or the color");
    }
  }
}

} // namespace

Table results_table(const MapperGraph& graph, const LayoutPositions& layout) {
  Table t;
  t.header = {"type", "ball", "x", "y", "size", "color_mean", "color_bin", "source", "target", "x2", "y2", "shared"};
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& node = graph.nodes[i];
    const auto row = static_cast<Index>(i);
    t.rows.push_back({"node", std::to_string(node.id), format_number(layout.xy(row, 0)),
                      format_number(layout.xy(row, 1)), std::to_string(node.size), opt_number(node.color_mean),
                      node.color_bin ? std::to_string(*node.color_bin) : std::string(), "", "", "", "", ""});
  }
  for (const auto& e : graph.edges) {
    const Index s = e.source - 1;
    const Index d = e.target - 1;
    t.rows.push_back({"edge", "", format_number(layout.xy(s, 0)), format_number(layout.xy(s, 1)), "", "", "",
                      std::to_string(e.source), std::to_string(e.target), format_number(layout.xy(d, 0)),
                      format_number(layout.xy(d, 1)), std::to_string(e.shared)});
  }
  return t;
}

Table merged_table(const BallCover& cover, const Table& input, const std::optional<std::string>& id_column) {
  std::vector<std::size_t> order;
  if (id_column) order.push_back(input.column_index(*id_column));
  for (std::size_t c = 0; c < input.column_count(); ++c) {
    if (order.empty() || c != order.front()) order.push_back(c);
  }

  Table t;
  t.header = {"ball", "row"};
  for (std::size_t c : order) t.header.push_back(input.header[c]);
  for (int id = 1; id <= cover.ball_count(); ++id) {
    for (Index p : cover.members(id)) {
      const Index row_id = cover.row_id(p);
      const auto& src = input.rows.at(static_cast<std::size_t>(row_id));
      std::vector<std::string> cells{std::to_string(id), std::to_string(row_id)};
      for (std::size_t c : order) cells.push_back(src[c]);
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

RunResult execute_run(const RunConfig& config) {
  Table input = read_csv(config.input, config.delimiter);
  check_config(config, input);

  auto data = validate_axes(input, {config.axes, config.color},
                            config.drop_missing ? MissingPolicy::DropRows : MissingPolicy::Error);
  std::optional<Standardization> standardization;
  if (config.standardize) {
    auto [cloud, spec] = standardize(data.cloud);
    data.cloud = std::move(cloud);
    standardization = std::move(spec);
  }

  BallCover cover = build_cover(data.cloud, config.epsilon, config.order);
  MapperGraph graph = data.color ? build_graph(cover, *data.color) : build_graph(cover);
  std::optional<ColorScale> scale;
  if (data.color) {
    auto binned = assign_bins(std::move(graph), config.bins);
    graph = std::move(binned.graph);
    scale = std::move(binned.scale);
  }
  LayoutPositions layout = compute_layout(graph, config.layout);

  RenderOptions render = config.render;
  render.show_labels = config.labels;
  std::string svg = render_graph_svg(graph, layout, scale, render);
  Table results = results_table(graph, layout);
  Table merged = merged_table(cover, input, config.id_column);

  return {std::move(input), std::move(data), std::move(standardization), std::move(cover), std::move(graph),
          std::move(scale),  std::move(layout), std::move(results), std::move(merged), std::move(svg)};
}

RunResult cmd_run(const RunConfig& config, std::ostream& out) {
  RunResult run = execute_run(config);

  if (run.data.dropped_rows > 0) {
    out << run.data.dropped_rows << (run.data.dropped_rows == 1 ? " row" : " rows")
        << " dropped for missing values\n";
  }
  if (run.standardization) {
    out << "Standardized axes (mean, sd):\n";
    const auto& s = *run.standardization;
    for (std::size_t k = 0; k < s.columns.size(); ++k) {
      out << "  " << s.columns[k] << ": " << format_number(s.mean(static_cast<Index>(k))) << ", "
          << format_number(s.sd(static_cast<Index>(k))) << '\n';
    }
  }

  write_file(config.svg, run.svg);
  write_csv(config.results, run.results);
  write_csv(config.merged, run.merged);

  out << "Ball Mapper successful: " << run.cover.ball_count() << " balls, " << run.graph.edges.size()
      << " edges, " << connected_components(run.graph).size() << " connected components.\n"
      << "-> Graph written to: " << config.svg.string() << '\n'
      << "-> Graph data stored in: " << config.results.string() << '\n'
      << "-> Original data + ball ids stored in: " << config.merged.string() << '\n';
  return run;
}

void cmd_ball_summary(const std::filesystem::path& merged, const std::vector<std::string>& variables,
                      const std::filesystem::path& out_csv) {
  if (variables.empty()) throw ValidationError(ErrorCode::InvalidArgument, "no variables given");
  const Table table = read_csv(merged);
  const auto groups = groups_from_merged(table);
  write_csv(out_csv, ball_summary(groups, table, variables).to_table());
}

void cmd_variable_summary(const std::filesystem::path& merged, const std::string& variable,
                          const std::filesystem::path& out_csv,
                          const std::optional<std::filesystem::path>& boxplot_svg) {
  const Table table = read_csv(merged);
  const auto summary = variable_summary(groups_from_merged(table), table, variable);
  write_csv(out_csv, summary.to_table());
  if (boxplot_svg) write_file(*boxplot_svg, render_boxplot_svg(summary.rows, {}, variable + " by ball"));
}

void cmd_gen(const GenConfig& config) {
  Table t;
  if (config.dataset == "gauss") {
    t = gen_gaussian_cloud(config.n, config.k, config.seed);
  } else if (config.dataset == "x") {
    XDatasetSpec spec;
    spec.seed = config.seed;
    t = gen_x_dataset(spec);
  } else {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "unknown dataset '" + config.dataset + "' (expected 'gauss' or 'x')");
  }
  write_csv(config.out, t);
}

void cmd_describe(const std::filesystem::path& input, const std::vector<std::string>& columns,
                  const std::optional<std::filesystem::path>& out_csv,
                  const std::optional<std::filesystem::path>& correlation_csv, std::ostream& out) {
  const Table table = read_csv(input);
  if (columns.empty()) throw ValidationError(ErrorCode::InvalidArgument, "no columns given");
  const auto data = validate_axes(table, {columns, std::nullopt});
  const Table summary = describe_table(describe(data.cloud));
  if (out_csv) {
    write_csv(*out_csv, summary);
  } else {
    write_csv(out, summary);
  }

  if (correlation_csv) {
    const auto rho = correlation_matrix(data.cloud);
    Table t;
    t.header = {"variable"};
    t.header.insert(t.header.end(), columns.begin(), columns.end());
    for (Index i = 0; i < rho.rows(); ++i) {
      std::vector<std::string> row{columns[static_cast<std::size_t>(i)]};
      for (Index j = 0; j < rho.cols(); ++j) row.push_back(format_number(rho(i, j)));
      t.rows.push_back(std::move(row));
    }
    write_csv(*correlation_csv, t);
  }
}

int exit_code_for(const Error& error) { return error.code() == ErrorCode::Io ? 2 : 1; }

} // namespace tdabm
