#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "auto_tables.hpp"
#include "support.hpp"

#include "tdabm/summary.hpp"

#include <set>
#include <sys/wait.h>

using namespace tdabm;

namespace {

const std::filesystem::path dir = test::scratch_dir("cli");

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(const std::string& args) {
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string cmd = "cd '" + dir.string() + "' && '" + std::string(TDABM_CLI) + "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out), read_file(err)};
}

std::string auto_run(const std::string& extra = {}) {
  return "run -i '" + test::auto_csv().string() +
         "' --axes mpg,trunk,weight,length,turn,displacement,gear_ratio -e 1.5 --standardize --color foreign " +
         extra;
}

std::set<std::string> column_values(const Table& t, const std::string& name) {
  std::set<std::string> s;
  const auto c = t.column_index(name);
  for (const auto& r : t.rows)
    if (!r[c].empty()) s.insert(r[c]);
  return s;
}

} // namespace

TEST_CASE("run on the auto fixture") {
  const auto r = cli(auto_run("--id-col make --labels"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("weight: 3019.4594594594596, 777.1935671373664") != std::string::npos);
  CHECK(r.out.find("ballmapper.svg") != std::string::npos);
  CHECK(r.out.find("bm_results.csv") != std::string::npos);
  CHECK(r.out.find("bm_merged.csv") != std::string::npos);

  const auto results = read_csv(dir / "bm_results.csv");
  CHECK(results.header == std::vector<std::string>{"type", "ball", "x", "y", "size", "color_mean", "color_bin",
                                                   "source", "target", "x2", "y2", "shared"});
  std::size_t nodes = 0;
  Index total = 0;
  bool nodes_first = true, seen_edge = false;
  for (const auto& row : results.rows) {
    if (row[0] == "node") {
      nodes_first = nodes_first && !seen_edge;
      ++nodes;
      total += static_cast<Index>(*parse_number(row[4]));
      CHECK(row[7].empty());
      CHECK(row[11].empty());
    } else {
      CHECK(row[0] == "edge");
      seen_edge = true;
      CHECK(row[1].empty());
      CHECK(row[4].empty());
      CHECK(*parse_number(row[7]) < *parse_number(row[8]));
      CHECK(*parse_number(row[11]) >= 1);
    }
  }
  CHECK(nodes_first);
  CHECK(nodes == 19);

  const auto merged = read_csv(dir / "bm_merged.csv");
  CHECK(static_cast<Index>(merged.row_count()) == total);
  CHECK(total == 101);
  CHECK(merged.header[2] == "make");
  CHECK(column_values(merged, "ball") == column_values(results, "ball"));
  CHECK(std::filesystem::file_size(dir / "ballmapper.svg") > 0);
}

TEST_CASE("ballsummary and variablesummary from the merged file") {
  REQUIRE(cli(auto_run()).code == 0);
  std::string vars;
  for (const auto& v : test::auto_means_columns()) vars += (vars.empty() ? "" : ",") + v;
  const auto bs = cli("ballsummary -m bm_merged.csv --vars " + vars + " -o means.csv");
  REQUIRE(bs.code == 0);
  const auto means = read_csv(dir / "means.csv");
  REQUIRE(means.row_count() == 19);
  CHECK(means.rows[0][1] == "22.5");
  CHECK(means.rows[0][8] == "5725.25");
  CHECK(means.rows[0][10] == "4");

  const auto bad = cli("ballsummary -m bm_merged.csv --vars price,bogus -o x.csv");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("bogus") != std::string::npos);

  const auto vs = cli("variablesummary -m bm_merged.csv --var price -o price.csv --boxplot price.svg");
  REQUIRE(vs.code == 0);
  const auto price = BallDistributionTable::from_table(read_csv(dir / "price.csv"));
  CHECK(price.rows[0].mean == 5725.25);
  CHECK(price.rows[0].q25 == 4143.0);
  CHECK(price.rows[0].q50 == 5336.5);
  CHECK(price.rows[0].q75 == 7307.5);
  CHECK(std::abs(*price.rows[0].sd - 1946.6) <= 0.1);
  CHECK_FALSE(price.rows[8].sd);
  CHECK(read_file(dir / "price.svg").find("<svg") != std::string::npos);

  REQUIRE(cli("variablesummary -m bm_merged.csv --var foreign -o foreign.csv").code == 0);
  CHECK(read_csv(dir / "foreign.csv").rows[18] ==
        std::vector<std::string>{"19", "1", "0", "1", "1", "1", "1", "1", "2"});
}

TEST_CASE("toy merged file gives two rows") {
  write_file(dir / "toy.csv", "x,y\n0,2\n1,4\n2,6\n");
  REQUIRE(cli("run -i toy.csv --axes x -e 1 --color y --svg toy.svg --results toy_r.csv --merged toy_m.csv").code == 0);
  REQUIRE(cli("ballsummary -m toy_m.csv --vars y -o toy_means.csv").code == 0);
  const auto t = read_csv(dir / "toy_means.csv");
  CHECK(t.row_count() == 2);
  CHECK(t.rows[0] == std::vector<std::string>{"1", "3", "2"});
  CHECK(t.rows[1] == std::vector<std::string>{"2", "5", "2"});
  const auto svg = read_file(dir / "toy.svg");
  std::size_t circles = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  CHECK(circles == 2);
}

TEST_CASE("validation errors exit 1 with the message") {
  const auto zero = cli("run -i '" + test::auto_csv().string() + "' --axes mpg -e 0");
  CHECK(zero.code == 1);
  CHECK(zero.err.find("epsilon must be positive") != std::string::npos);

  const auto unknown = cli("run -i '" + test::auto_csv().string() + "' --axes mpg,nosuch -e 1");
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("nosuch") != std::string::npos);

  const auto missing = cli("run -i '" + test::auto_csv().string() + "' --axes rep78 -e 1");
  CHECK(missing.code == 1);
  CHECK(missing.err.find("missing value") != std::string::npos);

  const auto dropped = cli("run -i '" + test::auto_csv().string() + "' --axes rep78 -e 1 --drop-missing");
  CHECK(dropped.code == 0);
  CHECK(dropped.out.find("5 rows dropped") != std::string::npos);

  CHECK(cli("run --axes mpg -e 1").code == 1);                     // no input
  CHECK(cli("run -i x.csv --axes mpg -e 1 --order sideways").code == 1);
  CHECK(cli("gen nosuch -o n.csv").code == 1);
  CHECK(cli("").code == 1);
}

TEST_CASE("drop-missing reports a single row") {
  write_file(dir / "one_missing.csv", "a,b\n1,2\n,3\n4,5\n");
  const auto r = cli("run -i one_missing.csv --axes a,b -e 1 --drop-missing");
  CHECK(r.code == 0);
  CHECK(r.out.find("1 row dropped") != std::string::npos);
}

TEST_CASE("I/O errors exit 2") {
  CHECK(cli("run -i /nonexistent/in.csv --axes a -e 1").code == 2);
  CHECK(cli(auto_run("--svg /nonexistent/dir/g.svg")).code == 2);
  CHECK(cli("ballsummary -m /nonexistent/m.csv --vars a").code == 2);
}

TEST_CASE("id column rules") {
  CHECK(cli(auto_run("--id-col nosuch")).code == 1);
  CHECK(cli(auto_run("--id-col mpg")).code == 1);
  write_file(dir / "clash.csv", "ball,x\n1,0\n2,1\n");
  CHECK(cli("run -i clash.csv --axes x -e 1").code == 1);
}

TEST_CASE("gen") {
  REQUIRE(cli("gen x --seed 7 -o x.csv").code == 0);
  const auto x = read_csv(dir / "x.csv");
  CHECK(x.row_count() == 900);
  CHECK(x.column_count() == 8);
  REQUIRE(cli("gen gauss --n 1000 --k 2 --seed 1 -o g.csv").code == 0);
  CHECK(read_csv(dir / "g.csv").row_count() == 1000);
  const auto first = read_file(dir / "g.csv");
  REQUIRE(cli("gen gauss --n 1000 --k 2 --seed 1 -o g.csv").code == 0);
  CHECK(read_file(dir / "g.csv") == first);
}

TEST_CASE("run is byte deterministic, including shuffled order") {
  for (const std::string extra : {"", "--order shuffle --seed 3"}) {
    REQUIRE(cli(auto_run(extra)).code == 0);
    const auto a = read_file(dir / "ballmapper.svg") + read_file(dir / "bm_results.csv") +
                   read_file(dir / "bm_merged.csv");
    REQUIRE(cli(auto_run(extra)).code == 0);
    const auto b = read_file(dir / "ballmapper.svg") + read_file(dir / "bm_results.csv") +
                   read_file(dir / "bm_merged.csv");
    CHECK(a == b);
  }
}

TEST_CASE("describe") {
  const auto r = cli("describe -i '" + test::auto_csv().string() + "' --vars price,mpg,weight --corr corr.csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("variable,mean,sd,min,max\n", 0) == 0);
  const auto corr = read_csv(dir / "corr.csv");
  CHECK(std::abs(*parse_number(corr.rows[1][3]) + 0.8072) <= 0.0001);
}

TEST_CASE("cleanup") { std::filesystem::remove_all(dir); }
