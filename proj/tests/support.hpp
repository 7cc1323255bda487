#ifndef TDABM_TESTS_SUPPORT_HPP
#define TDABM_TESTS_SUPPORT_HPP

#include "tdabm/cover.hpp"
#include "tdabm/csv.hpp"
#include "tdabm/point_cloud.hpp"
#include "tdabm/random.hpp"

#include <cmath>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tdabm::test {

inline std::filesystem::path data_dir() { return TDABM_DATA_DIR; }
inline std::filesystem::path auto_csv() { return data_dir() / "auto.csv"; }

inline const std::vector<std::string>& auto_axes() {
  static const std::vector<std::string> axes{"mpg", "trunk", "weight", "length", "turn", "displacement", "gear_ratio"};
  return axes;
}

inline const std::vector<Index>& auto_sizes() {
  static const std::vector<Index> sizes{4, 2, 8, 17, 9, 6, 2, 2, 1, 5, 10, 10, 2, 2, 4, 3, 9, 3, 2};
  return sizes;
}

/// Cover of the auto fixture: 7 standardized axes, eps 1.5, data order.
inline BallCover auto_cover(const Table& table) {
  const auto data = validate_axes(table, {auto_axes(), std::nullopt});
  return build_cover(standardize(data.cloud).first, 1.5);
}

/// Scratch directory unique to one test binary.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tdabm_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

/// Half a unit in the last printed digit of a table literal: "22.50" -> 0.005,
/// "5725" -> 0.5.
inline double print_tolerance(std::string_view printed) {
  const auto dot = printed.find('.');
  const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  return 0.5 * std::pow(10.0, -decimals);
}

inline bool within_printed(double value, std::string_view printed) {
  return std::abs(value - *parse_number(printed)) <= print_tolerance(printed) + 1e-9;
}

/// The published tables occasionally round upwards (e.g. 0.7071 printed as
/// 0.708). True when `printed` is `value` rounded up at the printed precision.
inline bool rounded_up_to(double value, std::string_view printed) {
  const double p = *parse_number(printed);
  return value < p && p - value < 2.0 * print_tolerance(printed);
}

inline PointCloud cloud_from(const RowMatrix<double>& values) {
  std::vector<std::string> names;
  for (Index j = 0; j < values.cols(); ++j) names.push_back("c" + std::to_string(j));
  return PointCloud(names, values);
}

inline PointCloud random_cloud(Random& rng, Index n, Index k, double spread = 3.0) {
  RowMatrix<double> m(n, k);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < k; ++j) m(i, j) = spread * (2.0 * rng.uniform() - 1.0);
  return cloud_from(m);
}

/// Distance by explicit coordinate loop, independent of the Eigen expression
/// used by the library.
inline double oracle_distance(const PointCloud& cloud, Index a, Index b) {
  double sum = 0.0;
  for (Index j = 0; j < cloud.dims(); ++j) {
    const double d = cloud.values()(a, j) - cloud.values()(b, j);
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// Brute-force membership: for each point, the ball ids whose landmark is
/// within eps.
inline std::vector<std::vector<int>> oracle_membership(const PointCloud& cloud, const BallCover& cover) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(cloud.size()));
  for (Index p = 0; p < cloud.size(); ++p) {
    for (int b = 1; b <= cover.ball_count(); ++b) {
      const Index l = cover.landmark(b);
      double sum = 0.0;
      for (Index j = 0; j < cloud.dims(); ++j) {
        const double d = cloud.values()(p, j) - cloud.values()(l, j);
        sum += d * d;
      }
      if (std::sqrt(sum) <= cover.epsilon()) out[static_cast<std::size_t>(p)].push_back(b);
    }
  }
  return out;
}

/// Column of a table parsed as doubles.
inline std::vector<double> numeric_column(const Table& t, const std::string& name) {
  const auto c = t.column_index(name);
  std::vector<double> v;
  for (const auto& row : t.rows) v.push_back(*parse_number(row[c]));
  return v;
}

} // namespace tdabm::test

#endif // TDABM_TESTS_SUPPORT_HPP
