#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "abcnet/events.hpp"

namespace abcnet {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-layer weighted adjacency over the iteration window
/// [end_iteration - window + 1, end_iteration]. Entry (i, j) counts
/// events with influenced = i, influencer = j in the window; aggregated
/// is maintained as the elementwise sum of the three layers.
struct LayeredWindowNetwork {
    std::size_t n = 0;
    std::size_t window = 0;
    std::size_t end_iteration = 0;
    CountMatrix employed;
    CountMatrix onlooker;
    CountMatrix scout;
    CountMatrix aggregated;
};

/// Count matrix of one layer's events at iteration t. Repeated pairs
/// within an iteration accumulate (onlookers may hit the same source
/// more than once). Throws std::out_of_range if an event indexes a bee
/// outside [0, n).
CountMatrix iteration_matrix(std::span<const InfluenceEvent> events,
                             std::size_t t, Layer layer, std::size_t n);

/// Windowed network by direct summation of per-iteration matrices over
/// [t - t_w + 1, t]. Requires t >= t_w >= 1 (std::invalid_argument
/// otherwise). Reference route for the sliding accumulator.
LayeredWindowNetwork window_network(std::span<const InfluenceEvent> events,
                                    std::size_t t, std::size_t t_w, std::size_t n);

/// Symmetrized view for orientation-free metrics: U = M + M^T with the
/// diagonal kept once (U_ii = M_ii).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> undirected_view(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> u = m + m.transpose();
    u.diagonal() = m.diagonal();
    return u;
}

/// Maintains the windowed per-layer networks incrementally: each pushed
/// iteration adds its events and, once the ring holds `window`
/// iterations, subtracts the oldest. O(events) per step regardless of
/// window size. Iterations must be pushed consecutively starting at 1.
/// A window of kCumulative never subtracts (full-history matrices).
class SlidingWindowAccumulator {
public:
    static constexpr std::size_t kCumulative = 0;

    SlidingWindowAccumulator(std::size_t n, std::size_t window);

    void push_iteration(std::span<const InfluenceEvent> events, std::size_t iteration);

    const LayeredWindowNetwork& network() const { return net_; }
    bool window_filled() const;

private:
    void apply(const InfluenceEvent& event, std::int64_t delta);

    bool cumulative_ = false;
    LayeredWindowNetwork net_;
    std::deque<std::vector<InfluenceEvent>> ring_;
};

}  // namespace abcnet
