#ifndef TDABM_SUMMARY_HPP
#define TDABM_SUMMARY_HPP

#include "tdabm/cover.hpp"
#include "tdabm/csv.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tdabm {

/// Percentile of ascending `sorted` values, p in (0, 100). With h = n p / 100:
/// an integral h averages the h-th and (h+1)-th order statistics, otherwise
/// the ceil(h)-th order statistic is returned. This is the convention the
/// Stata ballmapper tables follow.
double quantile(std::span<const double> sorted, double percent);

/// Rows of a table grouped by ball: `rows[i]` holds the table rows belonging
/// to ball `ball_ids[i]`. Ids ascend.
struct BallGroups {
  std::vector<int> ball_ids;
  std::vector<std::vector<std::size_t>> rows;
};

/// Groups from a cover, addressing rows of the table the cloud was read from.
BallGroups groups_from_cover(const BallCover& cover);

/// Groups from a merged membership CSV (one row per point/ball pair, with a
/// `ball` column), addressing rows of that merged table.
BallGroups groups_from_merged(const Table& merged);

struct BallMeansRow {
  int ball = 0;
  std::vector<double> means; // one per variable
  Index size = 0;
};

struct BallMeansTable {
  std::vector<std::string> variables;
  std::vector<BallMeansRow> rows;

  /// Header `ball,<var1>,...,<varK>,size`.
  Table to_table() const;
};

struct DistributionRow {
  int ball = 0;
  double mean = 0.0;
  std::optional<double> sd; // empty when size == 1
  double min = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0, max = 0.0;
  Index size = 0;
};

struct BallDistributionTable {
  std::string variable;
  std::vector<DistributionRow> rows;

  /// Header `ball,mean,sd,min,q25,q50,q75,max,size`.
  Table to_table() const;
  /// Inverse of to_table; a blank or non-numeric quantile is MalformedInput.
  static BallDistributionTable from_table(const Table& table, std::string variable = {});
};

/// Per-ball arithmetic means; a point in several balls counts in each.
BallMeansTable ball_summary(const BallGroups& groups, const Table& table, std::span<const std::string> variables);
BallMeansTable ball_summary(const BallCover& cover, const Table& table, std::span<const std::string> variables);

/// Mean, sample sd, min, quartiles, max and size of one variable per ball.
BallDistributionTable variable_summary(const BallGroups& groups, const Table& table, const std::string& variable);
BallDistributionTable variable_summary(const BallCover& cover, const Table& table, const std::string& variable);

} // namespace tdabm

#endif // TDABM_SUMMARY_HPP
