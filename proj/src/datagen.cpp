#include "tdabm/datagen.hpp"

#include "tdabm/error.hpp"
#include "tdabm/random.hpp"

#include <vector>

namespace tdabm {

Table gen_gaussian_cloud(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw ValidationError(ErrorCode::InvalidArgument, "n and k must be at least 1");
  Random rng(seed);
  Table t;
  for (int j = 1; j <= k; ++j) t.header.push_back("x" + std::to_string(j));
  t.rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> row;
    row.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) row.push_back(format_number(rng.normal()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table gen_x_dataset(const XDatasetSpec& spec) {
  if (spec.group_size < 1) throw ValidationError(ErrorCode::InvalidArgument, "group size must be at least 1");
  const std::size_t n = spec.centers.size() * static_cast<std::size_t>(spec.group_size);
  Random rng(spec.seed);

  auto draw = [&](double sd) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal(0.0, sd);
    return v;
  };
  auto x1 = draw(1.0);
  auto x2 = draw(1.0);
  const auto theta1 = draw(spec.noise_sd);
  const auto theta3 = draw(spec.noise_sd);
  const auto phi = draw(1.0);

  Table t;
  t.header = {"x1", "x2", "y1", "y2", "y3", "y4", "y5", "group"};
  t.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g = i / static_cast<std::size_t>(spec.group_size);
    x1[i] += spec.centers[g].first;
    x2[i] += spec.centers[g].second;
    const double y1 = x1[i] + x2[i] + theta1[i];
    const double y3 = x1[i] * x1[i] + x2[i] * x2[i] + theta3[i];
    const int y5 = (x1[i] > 0.0 && x1[i] < 3.0 && x2[i] > 0.0 && x2[i] < 3.0) ? 1 : 0;
    const std::string group = std::to_string(g + 1);
    t.rows.push_back({format_number(x1[i]), format_number(x2[i]), format_number(y1), group, format_number(y3),
                      format_number(phi[i]), std::to_string(y5), group});
  }
  return t;
}

} // namespace tdabm
