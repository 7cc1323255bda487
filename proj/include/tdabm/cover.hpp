#ifndef TDABM_COVER_HPP
#define TDABM_COVER_HPP

#include "tdabm/point_cloud.hpp"
#include "tdabm/random.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace tdabm {

/// Order in which uncovered points are offered as landmarks.
struct LandmarkOrder {
  enum class Kind { Data, Shuffle };
  Kind kind = Kind::Data;
  std::uint64_t seed = 0;

  static LandmarkOrder data() { return {}; }
  static LandmarkOrder shuffled(std::uint64_t seed) { return {Kind::Shuffle, seed}; }

  /// Candidate sequence over point indices 0..n-1.
  std::vector<Index> sequence(Index n) const {
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    if (kind == Kind::Shuffle) Random(seed).shuffle(order);
    return order;
  }
};

/// The cover B(X, eps). Ball ids are 1-based in landmark order; members are
/// point indices into the cloud the cover was built from, sorted ascending.
class BallCover {
public:
  BallCover(double epsilon, Index point_count, std::vector<Index> row_ids, std::vector<Index> landmarks,
            std::vector<std::vector<Index>> members)
      : epsilon_(epsilon), point_count_(point_count), row_ids_(std::move(row_ids)),
        landmarks_(std::move(landmarks)), members_(std::move(members)) {}

  double epsilon() const { return epsilon_; }
  Index point_count() const { return point_count_; }
  int ball_count() const { return static_cast<int>(landmarks_.size()); }

  /// Landmark point of ball `id` (1-based).
  Index landmark(int id) const { return landmarks_.at(static_cast<std::size_t>(id - 1)); }
  const std::vector<Index>& members(int id) const { return members_.at(static_cast<std::size_t>(id - 1)); }

  const std::vector<Index>& landmarks() const { return landmarks_; }
  const std::vector<std::vector<Index>>& all_members() const { return members_; }

  /// Source-file row of a point.
  Index row_id(Index point) const { return row_ids_.at(static_cast<std::size_t>(point)); }
  const std::vector<Index>& row_ids() const { return row_ids_; }

private:
  double epsilon_;
  Index point_count_;
  std::vector<Index> row_ids_;
  std::vector<Index> landmarks_;
  std::vector<std::vector<Index>> members_;
};

/// Greedy eps-net cover: take the next uncovered point in `order` as a
/// landmark, put every point within distance <= epsilon of it in its ball
/// (covered before or not, which is where overlaps come from), repeat until
/// nothing is uncovered.
template <typename Scalar>
BallCover build_cover(const BasicPointCloud<Scalar>& cloud, Scalar epsilon,
                      LandmarkOrder order = LandmarkOrder::data()) {
  if (!(epsilon > Scalar(0)) || !std::isfinite(static_cast<double>(epsilon))) {
    throw ValidationError(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  }
  const Index n = cloud.size();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<Index> landmarks;
  std::vector<std::vector<Index>> members;

  for (Index candidate : order.sequence(n)) {
    if (covered[static_cast<std::size_t>(candidate)]) continue;
    const auto centre = cloud.point(candidate);
    std::vector<Index> ball;
    for (Index q = 0; q < n; ++q) {
      if (euclidean_distance(centre, cloud.point(q)) <= epsilon) {
        ball.push_back(q);
        covered[static_cast<std::size_t>(q)] = 1;
      }
    }
    landmarks.push_back(candidate);
    members.push_back(std::move(ball));
  }
  return BallCover(static_cast<double>(epsilon), n, cloud.row_ids(), std::move(landmarks), std::move(members));
}

/// For each point, the ascending ids of the balls containing it.
inline std::vector<std::vector<int>> membership_matrix(const BallCover& cover) {
  std::vector<std::vector<int>> balls_of(static_cast<std::size_t>(cover.point_count()));
  for (int id = 1; id <= cover.ball_count(); ++id) {
    for (Index p : cover.members(id)) balls_of[static_cast<std::size_t>(p)].push_back(id);
  }
  return balls_of;
}

/// n_b per ball, in ball-id order.
inline std::vector<Index> ball_sizes(const BallCover& cover) {
  std::vector<Index> sizes;
  sizes.reserve(static_cast<std::size_t>(cover.ball_count()));
  for (const auto& m : cover.all_members()) sizes.push_back(static_cast<Index>(m.size()));
  return sizes;
}

} // namespace tdabm

#endif // TDABM_COVER_HPP
