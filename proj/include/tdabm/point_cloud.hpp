#ifndef TDABM_POINT_CLOUD_HPP
#define TDABM_POINT_CLOUD_HPP

#include "tdabm/csv.hpp"
#include "tdabm/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tdabm {

using Index = Eigen::Index;

template <typename Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// N x K table of finite values: the space being covered. Row i is point i;
/// `row_ids()[i]` is that point's 0-based row in the source file, so rows
/// dropped during validation keep their original identity.
template <typename Scalar>
class BasicPointCloud {
public:
  using Matrix = RowMatrix<Scalar>;

  BasicPointCloud(std::vector<std::string> column_names, Matrix values,
                  std::vector<Index> row_ids = {})
      : column_names_(std::move(column_names)), values_(std::move(values)),
        row_ids_(std::move(row_ids)) {
    if (values_.rows() < 1 || values_.cols() < 1) {
      throw ValidationError(ErrorCode::EmptyTable, "point cloud needs at least one row and one column");
    }
    if (static_cast<Index>(column_names_.size()) != values_.cols()) {
      throw ValidationError(ErrorCode::DimensionMismatch, "column name count does not match column count");
    }
    std::set<std::string> seen;
    for (const auto& name : column_names_) {
      if (name.empty()) throw ValidationError(ErrorCode::EmptyColumnName, "empty column name");
      if (!seen.insert(name).second) {
        throw ValidationError(ErrorCode::DuplicateColumn, "duplicate column name '" + name + "'");
      }
    }
    if (!values_.allFinite()) {
      throw ValidationError(ErrorCode::NonNumeric, "point cloud contains a non-finite value");
    }
    if (row_ids_.empty()) {
      row_ids_.resize(static_cast<std::size_t>(values_.rows()));
      for (Index i = 0; i < values_.rows(); ++i) row_ids_[static_cast<std::size_t>(i)] = i;
    } else if (static_cast<Index>(row_ids_.size()) != values_.rows()) {
      throw ValidationError(ErrorCode::DimensionMismatch, "row id count does not match row count");
    }
  }

  Index size() const { return values_.rows(); }
  Index dims() const { return values_.cols(); }

  const Matrix& values() const { return values_; }
  const std::vector<std::string>& column_names() const { return column_names_; }
  const std::vector<Index>& row_ids() const { return row_ids_; }

  auto point(Index i) const { return values_.row(i); }
  auto column(Index j) const { return values_.col(j); }

  Index column_index(std::string_view name) const {
    for (std::size_t j = 0; j < column_names_.size(); ++j) {
      if (column_names_[j] == name) return static_cast<Index>(j);
    }
    throw ValidationError(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  }

private:
  std::vector<std::string> column_names_;
  Matrix values_;
  std::vector<Index> row_ids_;
};

using PointCloud = BasicPointCloud<double>;

/// Which columns span the space (X) and which one colors it (Y). Y may also
/// be one of the X columns.
struct ColumnSelection {
  std::vector<std::string> axis_columns;
  std::optional<std::string> color_column;
};

enum class MissingPolicy { Error, DropRows };

template <typename Scalar>
struct BasicValidatedData {
  BasicPointCloud<Scalar> cloud;
  std::optional<Vector<Scalar>> color; // aligned with cloud rows
  std::size_t dropped_rows = 0;
};

using ValidatedData = BasicValidatedData<double>;

/// Numeric view of the selected columns. A blank cell is MissingValue and any
/// other unparseable cell NonNumeric, both naming row and column; with
/// MissingPolicy::DropRows, rows with a blank selected cell are removed
/// instead (non-numeric text is still an error).
template <typename Scalar = double>
BasicValidatedData<Scalar> validate_axes(const Table& table, const ColumnSelection& selection,
                                         MissingPolicy policy = MissingPolicy::Error) {
  if (selection.axis_columns.empty()) {
    throw ValidationError(ErrorCode::InvalidArgument, "at least one axis column is required");
  }
  std::vector<std::size_t> axes;
  for (const auto& name : selection.axis_columns) axes.push_back(table.column_index(name));
  std::optional<std::size_t> color;
  if (selection.color_column) color = table.column_index(*selection.color_column);

  std::vector<std::size_t> selected = axes;
  if (color) selected.push_back(*color);

  if (table.row_count() == 0) throw ValidationError(ErrorCode::EmptyTable, "table has no data rows");

  std::vector<Index> keep;
  keep.reserve(table.row_count());
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    bool drop = false;
    for (std::size_t c : selected) {
      const auto& cell = table.rows[r][c];
      if (is_blank(cell)) {
        if (policy == MissingPolicy::DropRows) {
          drop = true;
          continue;
        }
        throw ValidationError(ErrorCode::MissingValue, "missing value in column '" + table.header[c] +
                                                           "' at row " + std::to_string(r));
      }
      if (!parse_number(cell)) {
        throw ValidationError(ErrorCode::NonNumeric, "non-numeric value '" + cell + "' in column '" +
                                                         table.header[c] + "' at row " + std::to_string(r));
      }
    }
    if (!drop) keep.push_back(static_cast<Index>(r));
  }
  if (keep.empty()) {
    throw ValidationError(ErrorCode::EmptyAfterDrop, "no rows left after dropping missing values");
  }

  const auto n = static_cast<Index>(keep.size());
  RowMatrix<Scalar> values(n, static_cast<Index>(axes.size()));
  std::optional<Vector<Scalar>> color_values;
  if (color) color_values = Vector<Scalar>(n);
  for (Index i = 0; i < n; ++i) {
    const auto& row = table.rows[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])];
    for (std::size_t j = 0; j < axes.size(); ++j) {
      values(i, static_cast<Index>(j)) = static_cast<Scalar>(*parse_number(row[axes[j]]));
    }
    if (color) (*color_values)(i) = static_cast<Scalar>(*parse_number(row[*color]));
  }

  return {BasicPointCloud<Scalar>(selection.axis_columns, std::move(values), std::move(keep)),
          std::move(color_values), table.row_count() - static_cast<std::size_t>(n)};
}

/// Per-column location/scale used to standardize; sd uses divisor N-1.
template <typename Scalar>
struct BasicStandardization {
  std::vector<std::string> columns;
  Vector<Scalar> mean;
  Vector<Scalar> sd;
};

using Standardization = BasicStandardization<double>;

template <typename Derived>
typename Derived::Scalar sample_mean(const Eigen::MatrixBase<Derived>& x) {
  return x.sum() / static_cast<typename Derived::Scalar>(x.size());
}

/// Sample standard deviation (divisor n-1); nullopt when n < 2.
template <typename Derived>
std::optional<typename Derived::Scalar> sample_sd(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() < 2) return std::nullopt;
  const Scalar mean = sample_mean(x);
  const Scalar ss = (x.array() - mean).square().sum();
  return std::sqrt(ss / static_cast<Scalar>(x.size() - 1));
}

/// Replaces each named column by (x - mean) / sd. An empty list means every
/// column.
template <typename Scalar>
std::pair<BasicPointCloud<Scalar>, BasicStandardization<Scalar>>
standardize(const BasicPointCloud<Scalar>& cloud, std::span<const std::string> columns = {}) {
  std::vector<std::string> names(columns.begin(), columns.end());
  if (names.empty()) names = cloud.column_names();

  BasicStandardization<Scalar> spec{names, Vector<Scalar>(static_cast<Index>(names.size())),
                                    Vector<Scalar>(static_cast<Index>(names.size()))};
  auto values = cloud.values();
  for (std::size_t k = 0; k < names.size(); ++k) {
    const Index j = cloud.column_index(names[k]);
    const auto sd = sample_sd(cloud.column(j));
    if (!sd || !(*sd > Scalar(0))) {
      throw ValidationError(ErrorCode::ZeroVariance, "column '" + names[k] + "' has zero variance");
    }
    const Scalar mean = sample_mean(cloud.column(j));
    values.col(j) = (values.col(j).array() - mean) / *sd;
    spec.mean(static_cast<Index>(k)) = mean;
    spec.sd(static_cast<Index>(k)) = *sd;
  }
  return {BasicPointCloud<Scalar>(cloud.column_names(), std::move(values), cloud.row_ids()),
          std::move(spec)};
}

/// L2 distance between two points of equal dimension.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar euclidean_distance(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) {
    throw ValidationError(ErrorCode::DimensionMismatch,
                          "points have different dimensions (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
  }
  return (a.derived().reshaped() - b.derived().reshaped()).norm();
}

struct ColumnSummary {
  std::string name;
  double mean = 0.0;
  std::optional<double> sd; // empty for a single observation
  double min = 0.0;
  double max = 0.0;
};

/// Mean, sample sd, min and max per column. An empty list means every column.
template <typename Scalar>
std::vector<ColumnSummary> describe(const BasicPointCloud<Scalar>& cloud,
                                    std::span<const std::string> columns = {}) {
  std::vector<std::string> names(columns.begin(), columns.end());
  if (names.empty()) names = cloud.column_names();
  std::vector<ColumnSummary> rows;
  rows.reserve(names.size());
  for (const auto& name : names) {
    const auto col = cloud.column(cloud.column_index(name));
    ColumnSummary row{name, static_cast<double>(sample_mean(col)), std::nullopt,
                      static_cast<double>(col.minCoeff()), static_cast<double>(col.maxCoeff())};
    if (auto sd = sample_sd(col)) row.sd = static_cast<double>(*sd);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Header `variable,mean,sd,min,max`; sd empty when undefined.
Table describe_table(const std::vector<ColumnSummary>& rows);

/// Pearson correlations. Diagonal is exactly 1 and the result is symmetric
/// bit for bit; off-diagonal entries are clamped to [-1, 1].
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
correlation_matrix(const BasicPointCloud<Scalar>& cloud, std::span<const std::string> columns = {}) {
  std::vector<std::string> names(columns.begin(), columns.end());
  if (names.empty()) names = cloud.column_names();
  const auto k = static_cast<Index>(names.size());
  const Index n = cloud.size();

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> centered(n, k);
  for (Index j = 0; j < k; ++j) {
    const auto col = cloud.column(cloud.column_index(names[static_cast<std::size_t>(j)]));
    centered.col(j) = col.array() - sample_mean(col);
    if (!(centered.col(j).squaredNorm() > Scalar(0))) {
      throw ValidationError(ErrorCode::ZeroVariance,
                            "column '" + names[static_cast<std::size_t>(j)] + "' has zero variance");
    }
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rho =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      const Scalar r = centered.col(i).dot(centered.col(j)) /
                       std::sqrt(centered.col(i).squaredNorm() * centered.col(j).squaredNorm());
      rho(i, j) = rho(j, i) = std::clamp(r, Scalar(-1), Scalar(1));
    }
  }
  return rho;
}

} // namespace tdabm

#endif // TDABM_POINT_CLOUD_HPP
