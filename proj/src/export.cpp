#include "abcnet/export.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace abcnet {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
    std::ofstream out(path, mode);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    return in;
}

void finish(std::ostream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

double parse_double(const std::string& s, const std::filesystem::path& path) {
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw std::runtime_error("bad numeric field '" + s + "' in " + path.string());
    }
}

std::uint64_t parse_uint(const std::string& s, const std::filesystem::path& path) {
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw std::runtime_error("bad integer field '" + s + "' in " + path.string());
    }
}

}  // namespace

const char* const kMetricsCsvHeader =
    "iteration,best_fitness,id_value,components,giant_nodes,giant_edges,"
    "giant_weight,scouts,events_E,events_O,events_S";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_metrics_csv(const MetricsSeries& series, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kMetricsCsvHeader << '\n';
    for (const MetricsRow& row : series) {
        out << row.iteration << ',' << format_double(row.best_fitness) << ',';
        if (row.id_value) out << format_double(*row.id_value);
        out << ',';
        if (row.components) out << *row.components;
        out << ',';
        if (row.giant_nodes) out << *row.giant_nodes;
        out << ',';
        if (row.giant_edges) out << *row.giant_edges;
        out << ',';
        if (row.giant_weight) out << format_double(*row.giant_weight);
        out << ',' << row.scouts << ',' << row.events_employed << ','
            << row.events_onlooker << ',' << row.events_scout << '\n';
    }
    finish(out, path);
}

MetricsSeries read_metrics_csv(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kMetricsCsvHeader) {
        throw std::runtime_error("bad metrics CSV header in " + path.string());
    }
    MetricsSeries series;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 11) {
            throw std::runtime_error("bad metrics row in " + path.string());
        }
        MetricsRow row;
        row.iteration = parse_uint(fields[0], path);
        row.best_fitness = parse_double(fields[1], path);
        if (!fields[2].empty()) row.id_value = parse_double(fields[2], path);
        if (!fields[3].empty()) row.components = parse_uint(fields[3], path);
        if (!fields[4].empty()) row.giant_nodes = parse_uint(fields[4], path);
        if (!fields[5].empty()) row.giant_edges = parse_uint(fields[5], path);
        if (!fields[6].empty()) row.giant_weight = parse_double(fields[6], path);
        row.scouts = parse_uint(fields[7], path);
        row.events_employed = parse_uint(fields[8], path);
        row.events_onlooker = parse_uint(fields[9], path);
        row.events_scout = parse_uint(fields[10], path);
        series.push_back(row);
    }
    return series;
}

void write_events_csv(std::span<const InfluenceEvent> events,
                      const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "iteration,influenced,influencer,layer\n";
    for (const InfluenceEvent& e : events) {
        out << e.iteration << ',' << e.influenced << ',' << e.influencer << ','
            << layer_char(e.layer) << '\n';
    }
    finish(out, path);
}

std::vector<InfluenceEvent> read_events_csv(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "iteration,influenced,influencer,layer") {
        throw std::runtime_error("bad events CSV header in " + path.string());
    }
    std::vector<InfluenceEvent> events;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4 || fields[3].size() != 1) {
            throw std::runtime_error("bad event row in " + path.string());
        }
        InfluenceEvent e;
        e.iteration = static_cast<std::uint32_t>(parse_uint(fields[0], path));
        e.influenced = static_cast<std::uint32_t>(parse_uint(fields[1], path));
        e.influencer = static_cast<std::uint32_t>(parse_uint(fields[2], path));
        e.layer = layer_from_char(fields[3][0]);
        events.push_back(e);
    }
    return events;
}

void write_matrix_file(const CountMatrix& m, const MatrixFileHeader& header,
                       const std::filesystem::path& path) {
    if (static_cast<std::size_t>(m.rows()) != header.n ||
        static_cast<std::size_t>(m.cols()) != header.n) {
        throw std::invalid_argument("matrix shape does not match header n");
    }
    std::ofstream out = open_out(path);
    out << "layer " << header.layer << '\n'
        << "window " << header.window << '\n'
        << "begin_iteration " << header.begin_iteration << '\n'
        << "end_iteration " << header.end_iteration << '\n'
        << "n " << header.n << '\n';
    for (std::size_t i = 0; i < header.n; ++i) {
        for (std::size_t j = 0; j < header.n; ++j) {
            if (j > 0) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    finish(out, path);
}

std::pair<CountMatrix, MatrixFileHeader> read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    MatrixFileHeader header;
    std::string key;
    auto expect_key = [&](const char* want) {
        in >> key;
        if (!in || key != want) {
            throw std::runtime_error("bad matrix header (expected '" + std::string(want) +
                                     "') in " + path.string());
        }
    };
    expect_key("layer");
    in >> header.layer;
    expect_key("window");
    in >> header.window;
    expect_key("begin_iteration");
    in >> header.begin_iteration;
    expect_key("end_iteration");
    in >> header.end_iteration;
    expect_key("n");
    in >> header.n;
    if (!in) {
        throw std::runtime_error("truncated matrix header in " + path.string());
    }
    CountMatrix m(header.n, header.n);
    for (std::size_t i = 0; i < header.n; ++i) {
        for (std::size_t j = 0; j < header.n; ++j) {
            if (!(in >> m(i, j))) {
                throw std::runtime_error("truncated matrix body in " + path.string());
            }
        }
    }
    std::int64_t extra;
    if (in >> extra) {
        throw std::runtime_error("trailing data in matrix file " + path.string());
    }
    return {std::move(m), header};
}

std::array<std::uint8_t, 3> heatmap_color(double v, double vmax) {
    // Gradient stops, low to high.
    static constexpr std::array<std::array<double, 3>, 5> stops = {{
        {0.0, 0.0, 128.0},    // dark blue
        {0.0, 0.0, 255.0},    // blue
        {0.0, 255.0, 0.0},    // green
        {255.0, 255.0, 0.0},  // yellow
        {128.0, 0.0, 0.0},    // dark red
    }};
    double pos = 0.0;
    if (vmax > 0.0) {
        pos = std::clamp(v / vmax, 0.0, 1.0);
    }
    const double scaled = pos * (stops.size() - 1);
    const auto lo = static_cast<std::size_t>(scaled) >= stops.size() - 1
                        ? stops.size() - 2
                        : static_cast<std::size_t>(scaled);
    const double frac = scaled - static_cast<double>(lo);
    std::array<std::uint8_t, 3> rgb{};
    for (std::size_t c = 0; c < 3; ++c) {
        const double value = stops[lo][c] + frac * (stops[lo + 1][c] - stops[lo][c]);
        rgb[c] = static_cast<std::uint8_t>(value + 0.5);
    }
    return rgb;
}

void write_heatmap_ppm(const Eigen::MatrixXd& m, const std::filesystem::path& path) {
    if (m.rows() == 0 || m.cols() == 0) {
        throw std::invalid_argument("write_heatmap_ppm: empty matrix");
    }
    const double vmax = m.maxCoeff();
    std::ofstream out = open_out(path, std::ios::binary);
    out << "P6\n" << m.cols() << ' ' << m.rows() << "\n255\n";
    std::vector<std::uint8_t> pixels;
    pixels.reserve(static_cast<std::size_t>(m.rows() * m.cols()) * 3);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const auto rgb = heatmap_color(m(r, c), vmax);
            pixels.insert(pixels.end(), rgb.begin(), rgb.end());
        }
    }
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    finish(out, path);
}

void write_heatmap_ppm(const CountMatrix& m, const std::filesystem::path& path) {
    write_heatmap_ppm(Eigen::MatrixXd(m.cast<double>()), path);
}

}  // namespace abcnet
