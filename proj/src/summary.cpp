#include "tdabm/summary.hpp"

#include "tdabm/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tdabm {

double quantile(std::span<const double> sorted, double percent) {
  if (sorted.empty()) throw ValidationError(ErrorCode::InvalidArgument, "quantile of an empty set");
  if (!(percent > 0.0 && percent < 100.0)) {
    throw ValidationError(ErrorCode::InvalidArgument, "percentile must lie in (0, 100)");
  }
  const double n = static_cast<double>(sorted.size());
  const double h = n * percent / 100.0;
  const double whole = std::floor(h);
  if (h == whole) {
    const auto k = static_cast<std::size_t>(whole); // 1 <= k < n
    return (sorted[k - 1] + sorted[k]) / 2.0;
  }
  return sorted[static_cast<std::size_t>(std::ceil(h)) - 1];
}

BallGroups groups_from_cover(const BallCover& cover) {
  BallGroups groups;
  for (int id = 1; id <= cover.ball_count(); ++id) {
    std::vector<std::size_t> rows;
    for (Index p : cover.members(id)) rows.push_back(static_cast<std::size_t>(cover.row_id(p)));
    groups.ball_ids.push_back(id);
    groups.rows.push_back(std::move(rows));
  }
  return groups;
}

BallGroups groups_from_merged(const Table& merged) {
  const auto ball_col = merged.find_column("ball");
  if (!ball_col) throw ValidationError(ErrorCode::MalformedInput, "merged file has no 'ball' column");
  std::map<int, std::vector<std::size_t>> by_ball;
  for (std::size_t r = 0; r < merged.row_count(); ++r) {
    const auto& cell = merged.rows[r][*ball_col];
    const auto id = parse_number(cell);
    if (!id || *id < 1 || *id != std::floor(*id)) {
      throw ValidationError(ErrorCode::MalformedInput,
                            "invalid ball id '" + cell + "' at row " + std::to_string(r));
    }
    by_ball[static_cast<int>(*id)].push_back(r);
  }
  BallGroups groups;
  for (auto& [id, rows] : by_ball) {
    groups.ball_ids.push_back(id);
    groups.rows.push_back(std::move(rows));
  }
  return groups;
}

namespace {

std::vector<double> values_of(const Table& table, std::size_t column, const std::vector<std::size_t>& rows) {
  std::vector<double> values;
  values.reserve(rows.size());
  for (std::size_t r : rows) {
    const auto& cell = table.rows.at(r)[column];
    if (is_blank(cell)) {
      throw ValidationError(ErrorCode::MissingValue, "missing value in column '" + table.header[column] +
                                                         "' at row " + std::to_string(r));
    }
    const auto v = parse_number(cell);
    if (!v) {
      throw ValidationError(ErrorCode::NonNumeric, "non-numeric value '" + cell + "' in column '" +
                                                       table.header[column] + "' at row " + std::to_string(r));
    }
    values.push_back(*v);
  }
  return values;
}

// Shared by both summaries so their means agree bit for bit.
double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::optional<double> sd_of(const std::vector<double>& values, double mean) {
  if (values.size() < 2) return std::nullopt;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

} // namespace

BallMeansTable ball_summary(const BallGroups& groups, const Table& table, std::span<const std::string> variables) {
  std::vector<std::size_t> columns;
  for (const auto& v : variables) columns.push_back(table.column_index(v));

  BallMeansTable out{std::vector<std::string>(variables.begin(), variables.end()), {}};
  for (std::size_t g = 0; g < groups.ball_ids.size(); ++g) {
    BallMeansRow row{groups.ball_ids[g], {}, static_cast<Index>(groups.rows[g].size())};
    for (std::size_t c : columns) row.means.push_back(mean_of(values_of(table, c, groups.rows[g])));
    out.rows.push_back(std::move(row));
  }
  return out;
}

BallMeansTable ball_summary(const BallCover& cover, const Table& table, std::span<const std::string> variables) {
  return ball_summary(groups_from_cover(cover), table, variables);
}

BallDistributionTable variable_summary(const BallGroups& groups, const Table& table, const std::string& variable) {
  const std::size_t column = table.column_index(variable);
  BallDistributionTable out{variable, {}};
  for (std::size_t g = 0; g < groups.ball_ids.size(); ++g) {
    auto values = values_of(table, column, groups.rows[g]);
    DistributionRow row;
    row.ball = groups.ball_ids[g];
    row.size = static_cast<Index>(values.size());
    row.mean = mean_of(values);
    row.sd = sd_of(values, row.mean);
    std::sort(values.begin(), values.end());
    row.min = values.front();
    row.max = values.back();
    row.q25 = quantile(values, 25);
    row.q50 = quantile(values, 50);
    row.q75 = quantile(values, 75);
    out.rows.push_back(row);
  }
  return out;
}

BallDistributionTable variable_summary(const BallCover& cover, const Table& table, const std::string& variable) {
  return variable_summary(groups_from_cover(cover), table, variable);
}

Table BallMeansTable::to_table() const {
  Table t;
  t.header.push_back("ball");
  t.header.insert(t.header.end(), variables.begin(), variables.end());
  t.header.push_back("size");
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.ball)};
    for (double m : row.means) cells.push_back(format_number(m));
    cells.push_back(std::to_string(row.size));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table BallDistributionTable::to_table() const {
  Table t;
  t.header = {"ball", "mean", "sd", "min", "q25", "q50", "q75", "max", "size"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.ball), format_number(r.mean), opt_number(r.sd), format_number(r.min),
                      format_number(r.q25), format_number(r.q50), format_number(r.q75), format_number(r.max),
                      std::to_string(r.size)});
  }
  return t;
}

BallDistributionTable BallDistributionTable::from_table(const Table& table, std::string variable) {
  const auto col = [&](const char* name) { return table.column_index(name); };
  const std::size_t c_ball = col("ball"), c_mean = col("mean"), c_sd = col("sd"), c_min = col("min"),
                    c_q25 = col("q25"), c_q50 = col("q50"), c_q75 = col("q75"), c_max = col("max"),
                    c_size = col("size");
  BallDistributionTable out{std::move(variable), {}};
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const auto& cells = table.rows[r];
    auto need = [&](std::size_t c) {
      const auto v = parse_number(cells[c]);
      if (!v) {
        throw ValidationError(ErrorCode::MalformedInput, "missing or invalid '" + table.header[c] +
                                                             "' for row " + std::to_string(r));
      }
      return *v;
    };
    DistributionRow row;
    row.ball = static_cast<int>(need(c_ball));
    row.mean = need(c_mean);
    if (!is_blank(cells[c_sd])) row.sd = need(c_sd);
    row.min = need(c_min);
    row.q25 = need(c_q25);
    row.q50 = need(c_q50);
    row.q75 = need(c_q75);
    row.max = need(c_max);
    row.size = static_cast<Index>(need(c_size));
    out.rows.push_back(row);
  }
  return out;
}

} // namespace tdabm
