#ifndef TDABM_DATAGEN_HPP
#define TDABM_DATAGEN_HPP

#include "tdabm/csv.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace tdabm {

/// n rows of k i.i.d. standard normals, columns x1..xk, drawn row by row from
/// Random(seed).
Table gen_gaussian_cloud(int n, int k, std::uint64_t seed);

/// Nine translated Gaussian sub-clouds forming an X, with outcomes:
///   y1 = x1 + x2 + theta,  theta ~ N(0, noise_sd)
///   y2 = group (1..9, in `centers` order)
///   y3 = x1^2 + x2^2 + theta
///   y4 = phi ~ N(0, 1)
///   y5 = 1 iff 0 < x1 < 3 and 0 < x2 < 3
struct XDatasetSpec {
  int group_size = 100;
  std::array<std::pair<double, double>, 9> centers{{{-6, 6}, {-3, 3}, {3, 3}, {6, 6}, {0, 0},
                                                    {-3, -3}, {3, -3}, {-6, -6}, {6, -6}}};
  double noise_sd = 0.2;
  std::uint64_t seed = 1;
};

/// Columns x1,x2,y1,y2,y3,y4,y5,group. Draw order: all x1, all x2, the y1
/// noise, the y3 noise, then y4.
Table gen_x_dataset(const XDatasetSpec& spec = {});

} // namespace tdabm

#endif // TDABM_DATAGEN_HPP
