#ifndef TDABM_LAYOUT_HPP
#define TDABM_LAYOUT_HPP

#include "tdabm/graph.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace tdabm {

template <typename Scalar>
using Positions = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;

/// Force-directed layout knobs. `repulsion` and `attraction` scale the
/// node-node push and the edge pull; the step cap cools linearly from
/// `initial_step` to `final_step` over `iterations`.
struct LayoutParams {
  double repulsion = 0.05;
  double attraction = 0.01;
  int iterations = 500;
  double initial_step = 0.1;
  double final_step = 0.001;
};

template <typename Scalar>
struct BasicLayoutPositions {
  Positions<Scalar> xy; // row i is node i (ball id i + 1)
  Eigen::Matrix<Scalar, 2, 1> min;
  Eigen::Matrix<Scalar, 2, 1> max;
};

using LayoutPositions = BasicLayoutPositions<double>;

/// Nodes evenly spaced on the unit circle in ball-id order.
template <typename Scalar = double>
Positions<Scalar> initial_positions(Index n) {
  Positions<Scalar> xy(n, 2);
  for (Index i = 0; i < n; ++i) {
    const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(i) / Scalar(n);
    xy(i, 0) = std::cos(angle);
    xy(i, 1) = std::sin(angle);
  }
  return xy;
}

/// Raw force simulation, before normalization. Per iteration each pair of
/// nodes repels with magnitude repulsion / d, each edge attracts with
/// attraction * d^2, and every node is pulled towards the origin with
/// attraction * |p| so disconnected pieces stay in frame. A node's move is
/// capped at the current step length.
template <typename Scalar>
Positions<Scalar> simulate_layout(const BasicMapperGraph<Scalar>& graph, const LayoutParams& params = {}) {
  const auto n = static_cast<Index>(graph.nodes.size());
  Positions<Scalar> xy = initial_positions<Scalar>(n);
  if (n <= 1) return Positions<Scalar>::Zero(n, 2);

  const Scalar repulsion(params.repulsion);
  const Scalar attraction(params.attraction);
  const Scalar tiny(1e-9);
  Positions<Scalar> disp(n, 2);

  for (int it = 0; it < params.iterations; ++it) {
    const Scalar step = params.iterations > 1
                            ? Scalar(params.initial_step + (params.final_step - params.initial_step) *
                                                               it / (params.iterations - 1))
                            : Scalar(params.initial_step);
    disp = -attraction * xy;

    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        Eigen::Matrix<Scalar, 1, 2> delta = xy.row(i) - xy.row(j);
        Scalar d = delta.norm();
        if (d < tiny) {
          delta << tiny, Scalar(0);
          d = tiny;
        }
        const Eigen::Matrix<Scalar, 1, 2> push = delta * (repulsion / (d * d));
        disp.row(i) += push;
        disp.row(j) -= push;
      }
    }
    for (const auto& e : graph.edges) {
      const Index s = e.source - 1;
      const Index t = e.target - 1;
      const Eigen::Matrix<Scalar, 1, 2> delta = xy.row(s) - xy.row(t);
      const Eigen::Matrix<Scalar, 1, 2> pull = delta * (attraction * delta.norm());
      disp.row(s) -= pull;
      disp.row(t) += pull;
    }
    for (Index i = 0; i < n; ++i) {
      const Scalar len = disp.row(i).norm();
      if (len > step) disp.row(i) *= step / len;
    }
    xy += disp;
  }
  return xy;
}

/// Per-axis affine map onto [0, 1]. An axis whose extent is negligible next
/// to the other (collinear layouts) is centred at 0.5; a single node sits at
/// the origin.
template <typename Scalar>
BasicLayoutPositions<Scalar> normalize_layout(const Positions<Scalar>& raw) {
  BasicLayoutPositions<Scalar> out{raw, {}, {}};
  if (raw.rows() == 0) {
    out.min.setZero();
    out.max.setZero();
    return out;
  }
  if (raw.rows() == 1) {
    out.xy.setZero();
    out.min.setZero();
    out.max.setZero();
    return out;
  }
  const Eigen::Matrix<Scalar, 1, 2> lo = raw.colwise().minCoeff();
  const Eigen::Matrix<Scalar, 1, 2> hi = raw.colwise().maxCoeff();
  const Eigen::Matrix<Scalar, 1, 2> extent = hi - lo;
  const Scalar largest = extent.maxCoeff();
  for (Index c = 0; c < 2; ++c) {
    if (largest > Scalar(0) && extent(c) > Scalar(1e-9) * largest) {
      out.xy.col(c) = (raw.col(c).array() - lo(c)) / extent(c);
    } else {
      out.xy.col(c).setConstant(Scalar(0.5));
    }
  }
  out.min = out.xy.colwise().minCoeff().transpose();
  out.max = out.xy.colwise().maxCoeff().transpose();
  return out;
}

/// Deterministic 2-D embedding in the unit box: simulate, then normalize.
template <typename Scalar>
BasicLayoutPositions<Scalar> compute_layout(const BasicMapperGraph<Scalar>& graph, const LayoutParams& params = {}) {
  if (!(params.repulsion > 0) || !(params.attraction > 0) || params.iterations < 1) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "repulsion and attraction must be positive and iterations at least 1");
  }
  return normalize_layout<Scalar>(simulate_layout(graph, params));
}

} // namespace tdabm

#endif // TDABM_LAYOUT_HPP
