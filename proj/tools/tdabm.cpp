#include "tdabm/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::optional<std::string> non_empty(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

char single_char(const std::string& s) {
  if (s == "\\t" || s == "tab") return '\t';
  if (s.size() != 1) throw tdabm::ValidationError(tdabm::ErrorCode::InvalidArgument, "delimiter must be one character");
  return s.front();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"TDA Ball Mapper: landmark ball covers, graphs and per-ball summaries"};
  app.require_subcommand(1);

  // run
  tdabm::RunConfig run;
  std::string run_color, id_col, order = "data", delimiter = ",";
  std::uint64_t run_seed = 1;
  auto* run_cmd = app.add_subcommand("run", "Build the ball cover and graph, write SVG and CSV outputs");
  run_cmd->add_option("-i,--input", run.input, "Input CSV")->required();
  run_cmd->add_option("--axes", run.axes, "Axis columns (comma list)")->required()->delimiter(',');
  run_cmd->add_option("-e,--epsilon", run.epsilon, "Ball radius")->required();
  run_cmd->add_option("--color", run_color, "Column whose per-ball mean colors the nodes");
  run_cmd->add_option("--repulsion", run.layout.repulsion, "Layout repulsion")->capture_default_str();
  run_cmd->add_option("--attraction", run.layout.attraction, "Layout attraction")->capture_default_str();
  run_cmd->add_option("--iterations", run.layout.iterations, "Layout iterations")->capture_default_str();
  run_cmd->add_option("--bins", run.bins, "Number of color bins")->capture_default_str();
  run_cmd->add_flag("--labels", run.labels, "Print ball ids on the nodes");
  run_cmd->add_flag("--standardize", run.standardize, "Standardize the axes before covering");
  run_cmd->add_flag("--drop-missing", run.drop_missing, "Drop rows with missing axis or color values");
  run_cmd->add_option("--id-col", id_col, "Identifier column carried into the merged CSV");
  run_cmd->add_option("--order", order, "Landmark order")
      ->check(CLI::IsMember({"data", "shuffle"}))
      ->capture_default_str();
  run_cmd->add_option("--seed", run_seed, "Seed for --order shuffle")->capture_default_str();
  run_cmd->add_option("--delimiter", delimiter, "Input field delimiter")->capture_default_str();
  run_cmd->add_option("--svg", run.svg, "Graph SVG output")->capture_default_str();
  run_cmd->add_option("--results", run.results, "Node and edge CSV output")->capture_default_str();
  run_cmd->add_option("--merged", run.merged, "Data with ball ids CSV output")->capture_default_str();

  // ballsummary
  std::filesystem::path bs_merged, bs_out = "ball_summary.csv";
  std::vector<std::string> bs_vars;
  auto* bs_cmd = app.add_subcommand("ballsummary", "Per-ball means of several variables");
  bs_cmd->add_option("-m,--merged", bs_merged, "Merged CSV from run")->required();
  bs_cmd->add_option("--vars", bs_vars, "Variables (comma list)")->required()->delimiter(',');
  bs_cmd->add_option("-o,--out", bs_out, "Output CSV")->capture_default_str();

  // variablesummary
  std::filesystem::path vs_merged, vs_out = "variable_summary.csv";
  std::string vs_var, vs_box;
  auto* vs_cmd = app.add_subcommand("variablesummary", "Per-ball distribution of one variable");
  vs_cmd->add_option("-m,--merged", vs_merged, "Merged CSV from run")->required();
  vs_cmd->add_option("--var", vs_var, "Variable")->required();
  vs_cmd->add_option("-o,--out", vs_out, "Output CSV")->capture_default_str();
  vs_cmd->add_option("--boxplot", vs_box, "Boxplot SVG output");

  // gen
  tdabm::GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset");
  gen_cmd->add_option("dataset", gen.dataset, "gauss or x")->required();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Rows (gauss)")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Columns (gauss)")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "Output CSV")->required();

  // describe
  std::filesystem::path d_input;
  std::vector<std::string> d_cols;
  std::string d_out, d_corr;
  auto* d_cmd = app.add_subcommand("describe", "Summary statistics and correlation matrix");
  d_cmd->add_option("-i,--input", d_input, "Input CSV")->required();
  d_cmd->add_option("--vars", d_cols, "Columns (comma list)")->required()->delimiter(',');
  d_cmd->add_option("-o,--out", d_out, "Summary CSV (stdout if omitted)");
  d_cmd->add_option("--corr", d_corr, "Correlation matrix CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*run_cmd) {
      run.color = non_empty(run_color);
      run.id_column = non_empty(id_col);
      run.delimiter = single_char(delimiter);
      run.order = order == "shuffle" ? tdabm::LandmarkOrder::shuffled(run_seed) : tdabm::LandmarkOrder::data();
      tdabm::cmd_run(run, std::cout);
    } else if (*bs_cmd) {
      tdabm::cmd_ball_summary(bs_merged, bs_vars, bs_out);
      std::cout << "Ball summary written to: " << bs_out.string() << '\n';
    } else if (*vs_cmd) {
      std::optional<std::filesystem::path> box;
      if (!vs_box.empty()) box = vs_box;
      tdabm::cmd_variable_summary(vs_merged, vs_var, vs_out, box);
      std::cout << "Variable summary written to: " << vs_out.string() << '\n';
      if (box) std::cout << "Boxplot written to: " << box->string() << '\n';
    } else if (*gen_cmd) {
      tdabm::cmd_gen(gen);
      std::cout << "Dataset written to: " << gen.out.string() << '\n';
    } else if (*d_cmd) {
      std::optional<std::filesystem::path> out, corr;
      if (!d_out.empty()) out = d_out;
      if (!d_corr.empty()) corr = d_corr;
      tdabm::cmd_describe(d_input, d_cols, out, corr, std::cout);
    }
  } catch (const tdabm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tdabm::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
