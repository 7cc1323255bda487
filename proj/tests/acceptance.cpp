// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "auto_tables.hpp"
#include "support.hpp"

#include "tdabm/datagen.hpp"
#include "tdabm/graph.hpp"
#include "tdabm/pipeline.hpp"
#include "tdabm/summary.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tdabm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    else if (detail.size() < 400) detail += "; " + why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Runs `body` and prints its line; a runtime budget of zero means none.
bool report(int number, const char* title, double budget_s, Outcome (*body)()) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs >= budget_s) o.fail("took " + fmt(secs) + " s, budget " + fmt(budget_s) + " s");
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", number, title, secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  return o.ok;
}

Outcome auto_cover_reproduction() {
  Outcome o;
  const auto t = read_csv(test::auto_csv());
  const auto cover = test::auto_cover(t);
  const auto sizes = ball_sizes(cover);
  o.expect(cover.ball_count() == 19, "ball count " + std::to_string(cover.ball_count()));
  o.expect(sizes == test::auto_sizes(), "size column differs");
  if (sizes != test::auto_sizes()) return o;

  const auto& cols = test::auto_means_columns();
  const auto means = ball_summary(cover, t, cols);
  const auto& want = test::auto_means_printed();
  for (std::size_t b = 0; b < want.size(); ++b) {
    for (std::size_t v = 0; v < cols.size(); ++v) {
      const double got = means.rows[b].means[v];
      if (!test::within_printed(got, want[b][v])) {
        o.fail("ball " + std::to_string(b + 1) + " " + cols[v] + " mean " + fmt(got) + " vs printed " + want[b][v] +
               " (tolerance " + fmt(test::print_tolerance(want[b][v])) + ")");
      }
    }
  }
  return o;
}

Outcome price_quantiles() {
  Outcome o;
  const auto t = read_csv(test::auto_csv());
  const auto rows = variable_summary(test::auto_cover(t), t, "price").rows;
  const auto& b1 = rows.at(0);
  o.expect(b1.mean == 5725.25, "ball 1 mean " + fmt(b1.mean));
  o.expect(b1.sd && std::abs(*b1.sd - 1946.6) <= 0.1, "ball 1 sd " + (b1.sd ? fmt(*b1.sd) : std::string("empty")));
  o.expect(b1.q25 == 4143, "ball 1 q25 " + fmt(b1.q25));
  o.expect(b1.q50 == 5336.5, "ball 1 q50 " + fmt(b1.q50));
  o.expect(b1.q75 == 7307.5, "ball 1 q75 " + fmt(b1.q75));
  o.expect(b1.min == 4099, "ball 1 min " + fmt(b1.min));
  o.expect(b1.max == 8129, "ball 1 max " + fmt(b1.max));
  o.expect(!rows.at(8).sd.has_value(), "ball 9 sd not empty");
  return o;
}

Outcome cover_properties() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    Random rng(seed);
    const auto n = 1 + static_cast<Index>(rng.below(200));
    const auto k = 1 + static_cast<Index>(rng.below(5));
    const auto cloud = test::random_cloud(rng, n, k);
    const double eps = 0.3 + 2.5 * rng.uniform();
    const auto cover = build_cover(cloud, eps);

    const auto got = membership_matrix(cover);
    const auto oracle = test::oracle_membership(cloud, cover);
    for (Index p = 0; p < n; ++p) {
      if (got[static_cast<std::size_t>(p)].empty()) o.fail(tag + "point " + std::to_string(p) + " uncovered");
    }
    if (got != oracle) o.fail(tag + "membership differs from brute force");
    for (int a = 1; a <= cover.ball_count(); ++a) {
      for (int b = a + 1; b <= cover.ball_count(); ++b) {
        if (test::oracle_distance(cloud, cover.landmark(a), cover.landmark(b)) <= eps)
          o.fail(tag + "landmarks " + std::to_string(a) + "," + std::to_string(b) + " within eps");
      }
    }

    // A point placed at exactly eps from the first point along an axis.
    RowMatrix<double> pair(2, k);
    pair.setZero();
    pair(0, 0) = cloud.values()(0, 0);
    pair(1, 0) = cloud.values()(0, 0) + 1.0;
    const auto edge = build_cover(test::cloud_from(pair), pair(1, 0) - pair(0, 0));
    if (edge.ball_count() != 1 || edge.members(1).size() != 2) o.fail(tag + "boundary point not inclusive");
  }
  return o;
}

Outcome x_dataset_checks() {
  Outcome o;
  const auto t = gen_x_dataset();
  const auto data = validate_axes(t, {{"x1", "x2"}, std::string("y5")});
  for (Index j = 0; j < 2; ++j) {
    const double sd = *sample_sd(data.cloud.column(j));
    o.expect(sd >= 4.35 && sd <= 4.85, "sd(x" + std::to_string(j + 1) + ") " + fmt(sd));
  }
  const double rho = correlation_matrix(data.cloud)(0, 1);
  o.expect(std::abs(rho) < 0.05, "rho " + fmt(rho));

  int previous = std::numeric_limits<int>::max();
  std::string counts;
  for (double eps : {0.8, 1.2, 2.0}) {
    const int l = build_cover(data.cloud, eps).ball_count();
    counts += (counts.empty() ? "" : "/") + std::to_string(l);
    o.expect(l < previous, "ball counts not strictly decreasing: " + counts);
    previous = l;
  }

  const auto cover = build_cover(data.cloud, 1.2);
  const auto g = build_graph(cover, *data.color);
  for (const auto& node : g.nodes) {
    const double m = *node.color_mean;
    o.expect(m >= 0.0 && m <= 1.0, "ball " + std::to_string(node.id) + " mean " + fmt(m));
    const auto& members = cover.members(node.id);
    const bool all_one =
        std::all_of(members.begin(), members.end(), [&](Index p) { return (*data.color)(p) == 1.0; });
    if (all_one) o.expect(m == 1.0, "all-ones ball " + std::to_string(node.id) + " mean " + fmt(m));
  }
  if (o.ok) o.detail = "balls " + counts;
  return o;
}

Outcome gaussian_intuition() {
  Outcome o;
  const auto t = gen_gaussian_cloud(1000, 2, 1);
  const auto cloud = validate_axes(t, {{"x1", "x2"}, std::nullopt}).cloud;
  const auto cover = build_cover(cloud, 1.0);
  const int l = cover.ball_count();
  o.expect(l >= 15 && l <= 30, "L = " + std::to_string(l));

  std::size_t largest = 0;
  for (const auto& comp : connected_components(build_graph(cover))) {
    std::set<Index> points;
    for (int b : comp) points.insert(cover.members(b).begin(), cover.members(b).end());
    largest = std::max(largest, points.size());
  }
  o.expect(largest * 10 >= 8 * 1000, "largest component covers " + std::to_string(largest) + " points");
  if (o.ok) o.detail = "L = " + std::to_string(l) + ", largest component " + std::to_string(largest) + "/1000";
  return o;
}

RunConfig auto_run(const std::filesystem::path& dir) {
  RunConfig c;
  c.input = test::auto_csv();
  c.axes = test::auto_axes();
  c.color = "price";
  c.epsilon = 1.5;
  c.standardize = true;
  c.labels = true;
  c.id_column = "make";
  c.svg = dir / "ballmapper.svg";
  c.results = dir / "bm_results.csv";
  c.merged = dir / "bm_merged.csv";
  return c;
}

RunConfig x_run(const std::filesystem::path& dir) {
  write_csv(dir / "x.csv", gen_x_dataset());
  RunConfig c;
  c.input = dir / "x.csv";
  c.axes = {"x1", "x2"};
  c.color = "y1";
  c.epsilon = 1.2;
  c.svg = dir / "ballmapper.svg";
  c.results = dir / "bm_results.csv";
  c.merged = dir / "bm_merged.csv";
  return c;
}

Outcome determinism() {
  Outcome o;
  const auto root = test::scratch_dir("acceptance_det");
  for (auto make : {&auto_run, &x_run}) {
    std::ostringstream sink;
    std::vector<std::string> first;
    for (int pass = 0; pass < 2; ++pass) {
      const auto dir = root / std::to_string(pass);
      std::filesystem::create_directories(dir);
      const auto c = make(dir);
      cmd_run(c, sink);
      const std::vector<std::string> bytes{slurp(c.svg), slurp(c.results), slurp(c.merged)};
      if (pass == 0) first = bytes;
      else if (bytes != first) o.fail(c.input.filename().string() + ": outputs differ between runs");
    }
  }
  std::filesystem::remove_all(root);
  return o;
}

Outcome consistency() {
  Outcome o;
  const auto root = test::scratch_dir("acceptance_sum");
  std::vector<RunConfig> runs{auto_run(root), x_run(root)};
  write_csv(root / "gauss.csv", gen_gaussian_cloud(1000, 2, 1));
  RunConfig g = runs.back();
  g.input = root / "gauss.csv";
  g.color.reset();
  g.epsilon = 1.0;
  runs.push_back(g);

  std::string sums;
  for (const auto& c : runs) {
    std::ostringstream sink;
    cmd_run(c, sink);
    const auto results = read_csv(c.results);
    const auto type = results.column_index("type");
    const auto size = results.column_index("size");
    long long total = 0;
    for (const auto& row : results.rows) {
      if (row[type] == "node") total += static_cast<long long>(*parse_number(row[size]));
    }
    const auto merged_rows = static_cast<long long>(read_csv(c.merged).row_count());
    const std::string name = c.input.filename().string();
    o.expect(total == merged_rows,
             name + ": sum of sizes " + std::to_string(total) + " vs merged rows " + std::to_string(merged_rows));
    if (name == "auto.csv") o.expect(total == 101, "auto sum " + std::to_string(total));
    sums += (sums.empty() ? "" : ", ") + name + " " + std::to_string(total);
  }
  std::filesystem::remove_all(root);
  if (o.ok) o.detail = sums;
  return o;
}

Outcome auto_correlation() {
  Outcome o;
  const auto t = read_csv(test::auto_csv());
  const auto data = validate_axes(t, {{"mpg", "weight"}, std::nullopt});
  const double rho = correlation_matrix(data.cloud)(0, 1);
  o.expect(std::abs(rho - -0.8072) <= 0.0001, "rho " + fmt(rho));
  if (o.ok) o.detail = "rho " + fmt(rho);
  return o;
}

} // namespace

int main() {
  bool all = true;
  all &= report(1, "auto cover: 19 balls, size column, ball means within printed rounding", 1.0,
                auto_cover_reproduction);
  all &= report(2, "price distribution for ball 1 and empty sd for ball 9", 0.0, price_quantiles);
  all &= report(3, "cover completeness, separation, inclusive boundary, brute-force membership", 10.0,
                cover_properties);
  all &= report(4, "X dataset: spread, correlation, radius monotonicity, binary colour means", 5.0,
                x_dataset_checks);
  all &= report(5, "Gaussian cloud at eps 1: landmark count and dominant component", 2.0, gaussian_intuition);
  all &= report(6, "two runs produce byte-identical SVG, results and merged files", 0.0, determinism);
  all &= report(7, "ball sizes sum to the merged row count (101 for auto)", 0.0, consistency);
  all &= report(8, "auto corr(mpg, weight) within 0.0001 of -0.8072", 0.0, auto_correlation);
  return all ? 0 : 1;
}
