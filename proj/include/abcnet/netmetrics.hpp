#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "abcnet/inet.hpp"

namespace abcnet {

/// Component count C(w) as edges at or below each normalized weight
/// threshold are removed, plus the area under the step curve.
/// Weights are normalized by the maximum off-diagonal entry; self-loops
/// never affect connectivity and are ignored here. For an edgeless graph
/// the curve is flat at n (area = n).
struct DestructionCurve {
    std::vector<double> thresholds;         // sorted, first 0, last 1
    std::vector<std::size_t> components_at; // C at each threshold
    double area = 0.0;                      // integral of C over [0, 1]
};

struct ComponentStats {
    std::size_t components = 0;
    std::size_t giant_nodes = 0;
    std::size_t giant_edges = 0;
    double giant_weight = 0.0;
};

/// Row sums d_i = sum_j U_ij; a self-loop contributes U_ii once.
Eigen::VectorXd weighted_degree(const Eigen::MatrixXd& u);

/// Complementary CDF evaluated at each distinct value, ascending:
/// (v, fraction of values >= v). Starts at 1.0, non-increasing.
/// Throws std::invalid_argument on empty input.
std::vector<std::pair<double, double>> ccdf(std::span<const double> values);

/// Destruction curve of a symmetric non-negative matrix. At threshold w
/// only edges with normalized weight strictly above w survive; isolated
/// nodes count as components, so C at threshold 1 is n.
DestructionCurve destruction_curve(const Eigen::MatrixXd& u);

/// Connected components over nonzero off-diagonal edges. The giant
/// component has the most nodes (ties: larger total edge weight, then
/// lowest contained node index); its edge count and weight include each
/// undirected pair once and members' self-loops once.
ComponentStats component_stats(const Eigen::MatrixXd& u);

/// Destruction-curve area of a window network's aggregated undirected
/// view. Helper shared by the ID routes.
double window_destruction_area(const LayeredWindowNetwork& net);

/// ID(t) = 1 - sum_{t_w in T} A_{t_w}(t) / (n |T|), areas from
/// window_destruction_area. Requires t >= max(T) and non-empty T.
double interaction_diversity(std::span<const InfluenceEvent> events, std::size_t t,
                             std::span<const std::size_t> windows, std::size_t n);

/// Same formula from precomputed per-window areas (accumulator route).
double interaction_diversity_from_areas(std::span<const double> areas, std::size_t n);

/// component_stats of the aggregated undirected window network at
/// iteration t with window t_w.
ComponentStats window_component_stats(std::span<const InfluenceEvent> events,
                                      std::size_t t, std::size_t t_w, std::size_t n);

}  // namespace abcnet
