#include "tdabm/point_cloud.hpp"

namespace tdabm {

Table describe_table(const std::vector<ColumnSummary>& rows) {
  Table t;
  t.header = {"variable", "mean", "sd", "min", "max"};
  for (const auto& r : rows) {
    t.rows.push_back({r.name, format_number(r.mean), r.sd ? format_number(*r.sd) : std::string(),
                      format_number(r.min), format_number(r.max)});
  }
  return t;
}

} // namespace tdabm
