#include "abcnet/netmetrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace abcnet {

namespace {

/// Union-find with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    std::size_t components() const { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t components_;
};

struct Edge {
    std::size_t a, b;
    double weight;
};

/// Off-diagonal upper-triangle edges of a symmetric matrix.
std::vector<Edge> collect_edges(const Eigen::MatrixXd& u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("expected a square matrix");
    }
    std::vector<Edge> edges;
    const auto n = static_cast<std::size_t>(u.rows());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (u(i, j) != 0.0) {
                edges.push_back({i, j, u(i, j)});
            }
        }
    }
    return edges;
}

}  // namespace

Eigen::VectorXd weighted_degree(const Eigen::MatrixXd& u) {
    return u.rowwise().sum();
}

std::vector<std::pair<double, double>> ccdf(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("ccdf: empty input");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            continue;
        }
        // everything from position i on is >= sorted[i]
        out.emplace_back(sorted[i], (sorted.size() - i) / n);
    }
    return out;
}

DestructionCurve destruction_curve(const Eigen::MatrixXd& u) {
    const auto n = static_cast<std::size_t>(u.rows());
    std::vector<Edge> edges = collect_edges(u);
    if (n == 0) {
        throw std::invalid_argument("destruction_curve: empty matrix");
    }

    DestructionCurve curve;
    if (edges.empty()) {
        // Edgeless graph: fully fragmented at every threshold.
        curve.thresholds = {0.0, 1.0};
        curve.components_at = {n, n};
        curve.area = static_cast<double>(n);
        return curve;
    }

    double w_max = 0.0;
    for (const Edge& e : edges) {
        w_max = std::max(w_max, e.weight);
    }
    for (Edge& e : edges) {
        e.weight /= w_max;
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.weight > b.weight; });

    curve.thresholds.push_back(0.0);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        if (curve.thresholds.back() != it->weight) {
            curve.thresholds.push_back(it->weight);
        }
    }

    // Sweep thresholds from high to low, inserting the edges that
    // survive each one; C(w) counts components among edges with
    // normalized weight strictly above w.
    std::vector<std::size_t> components(curve.thresholds.size());
    UnionFind uf(n);
    std::size_t next_edge = 0;
    for (std::size_t k = curve.thresholds.size(); k-- > 0;) {
        const double w = curve.thresholds[k];
        while (next_edge < edges.size() && edges[next_edge].weight > w) {
            uf.unite(edges[next_edge].a, edges[next_edge].b);
            ++next_edge;
        }
        components[k] = uf.components();
    }
    curve.components_at = std::move(components);

    // Right-continuous step function: C is constant on [w_k, w_{k+1}).
    double area = 0.0;
    for (std::size_t k = 0; k + 1 < curve.thresholds.size(); ++k) {
        area += static_cast<double>(curve.components_at[k]) *
                (curve.thresholds[k + 1] - curve.thresholds[k]);
    }
    curve.area = area;
    return curve;
}

ComponentStats component_stats(const Eigen::MatrixXd& u) {
    const auto n = static_cast<std::size_t>(u.rows());
    const std::vector<Edge> edges = collect_edges(u);
    UnionFind uf(n);
    for (const Edge& e : edges) {
        uf.unite(e.a, e.b);
    }

    ComponentStats stats;
    stats.components = uf.components();
    if (n == 0) {
        return stats;
    }

    std::vector<std::size_t> nodes(n, 0);
    std::vector<std::size_t> edge_count(n, 0);
    std::vector<double> weight(n, 0.0);
    std::vector<std::size_t> lowest(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        ++nodes[root];
        lowest[root] = std::min(lowest[root], i);
        if (u(i, i) != 0.0) {  // member self-loops count once
            ++edge_count[root];
            weight[root] += u(i, i);
        }
    }
    for (const Edge& e : edges) {
        const std::size_t root = uf.find(e.a);
        ++edge_count[root];
        weight[root] += e.weight;
    }

    std::size_t giant = n;
    for (std::size_t r = 0; r < n; ++r) {
        if (nodes[r] == 0) continue;
        if (giant == n || nodes[r] > nodes[giant] ||
            (nodes[r] == nodes[giant] && weight[r] > weight[giant]) ||
            (nodes[r] == nodes[giant] && weight[r] == weight[giant] &&
             lowest[r] < lowest[giant])) {
            giant = r;
        }
    }
    stats.giant_nodes = nodes[giant];
    stats.giant_edges = edge_count[giant];
    stats.giant_weight = weight[giant];
    return stats;
}

double window_destruction_area(const LayeredWindowNetwork& net) {
    const CountMatrix u = undirected_view(net.aggregated);
    return destruction_curve(u.cast<double>()).area;
}

double interaction_diversity_from_areas(std::span<const double> areas, std::size_t n) {
    if (areas.empty() || n == 0) {
        throw std::invalid_argument("interaction_diversity: empty window set");
    }
    double sum = 0.0;
    for (double a : areas) {
        sum += a;
    }
    return 1.0 - sum / (static_cast<double>(n) * static_cast<double>(areas.size()));
}

double interaction_diversity(std::span<const InfluenceEvent> events, std::size_t t,
                             std::span<const std::size_t> windows, std::size_t n) {
    if (windows.empty()) {
        throw std::invalid_argument("interaction_diversity: empty window set");
    }
    for (std::size_t t_w : windows) {
        if (t < t_w) {
            throw std::invalid_argument("interaction_diversity requires t >= max(T)");
        }
    }
    std::vector<double> areas;
    areas.reserve(windows.size());
    for (std::size_t t_w : windows) {
        areas.push_back(window_destruction_area(window_network(events, t, t_w, n)));
    }
    return interaction_diversity_from_areas(areas, n);
}

ComponentStats window_component_stats(std::span<const InfluenceEvent> events,
                                      std::size_t t, std::size_t t_w, std::size_t n) {
    const CountMatrix u = undirected_view(window_network(events, t, t_w, n).aggregated);
    return component_stats(u.cast<double>());
}

}  // namespace abcnet
