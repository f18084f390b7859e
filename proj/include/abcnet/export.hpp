#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abcnet/events.hpp"
#include "abcnet/inet.hpp"

namespace abcnet {

/// One metrics row per iteration. The ID and component fields are only
/// present on iterations where the harness computed them (metric
/// stride); they serialize as empty CSV fields otherwise.
struct MetricsRow {
    std::size_t iteration = 0;
    double best_fitness = 0.0;
    std::optional<double> id_value;
    std::optional<std::size_t> components;
    std::optional<std::size_t> giant_nodes;
    std::optional<std::size_t> giant_edges;
    std::optional<double> giant_weight;
    std::size_t scouts = 0;
    std::size_t events_employed = 0;
    std::size_t events_onlooker = 0;
    std::size_t events_scout = 0;

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

using MetricsSeries = std::vector<MetricsRow>;

/// Fixed header line of the metrics CSV.
extern const char* const kMetricsCsvHeader;

/// Doubles in CSV files are written with 17 significant digits so every
/// value round-trips exactly.
std::string format_double(double v);

void write_metrics_csv(const MetricsSeries& series, const std::filesystem::path& path);
MetricsSeries read_metrics_csv(const std::filesystem::path& path);

/// Events CSV: header "iteration,influenced,influencer,layer", layer
/// tagged E/O/S, one event per row.
void write_events_csv(std::span<const InfluenceEvent> events,
                      const std::filesystem::path& path);
std::vector<InfluenceEvent> read_events_csv(const std::filesystem::path& path);

/// Adjacency-matrix text file: five header lines (layer, window,
/// begin/end iteration, n) then n rows of n integer entries.
struct MatrixFileHeader {
    std::string layer;  // "E", "O", "S" or "A"
    std::size_t window = 0;
    std::size_t begin_iteration = 0;
    std::size_t end_iteration = 0;
    std::size_t n = 0;
};

void write_matrix_file(const CountMatrix& m, const MatrixFileHeader& header,
                       const std::filesystem::path& path);
std::pair<CountMatrix, MatrixFileHeader> read_matrix_file(const std::filesystem::path& path);

/// Color for a matrix value against the global maximum: a 5-stop linear
/// gradient (dark blue, blue, green, yellow, dark red) over the
/// normalized position v / vmax. vmax <= 0 maps everything to the
/// lowest stop.
std::array<std::uint8_t, 3> heatmap_color(double v, double vmax);

/// Binary PPM (P6) of an n x m matrix, one pixel per entry, colored by
/// heatmap_color against the matrix maximum. Deterministic bytes.
/// Throws std::invalid_argument for an empty matrix.
void write_heatmap_ppm(const Eigen::MatrixXd& m, const std::filesystem::path& path);
void write_heatmap_ppm(const CountMatrix& m, const std::filesystem::path& path);

}  // namespace abcnet
