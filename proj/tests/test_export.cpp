#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "abcnet/export.hpp"
#include "testutil.hpp"

using namespace abcnet;
using testutil::TempDir;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("metrics csv: header-only when empty, one line per row") {
    TempDir dir("metrics");
    const auto path = dir.path / "m.csv";

    write_metrics_csv({}, path);
    CHECK(slurp(path) == std::string(kMetricsCsvHeader) + "\n");
    CHECK(read_metrics_csv(path).empty());

    MetricsSeries series(3);
    for (std::size_t i = 0; i < 3; ++i) {
        series[i].iteration = i + 1;
        series[i].best_fitness = 10.0 / (i + 1);
    }
    write_metrics_csv(series, path);
    const std::string text = slurp(path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("metrics csv round-trips every field exactly") {
    TempDir dir("metrics_rt");
    const auto path = dir.path / "m.csv";
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> value(-1e6, 1e6);

    MetricsSeries series;
    for (std::size_t i = 1; i <= 40; ++i) {
        MetricsRow row;
        row.iteration = i;
        row.best_fitness = value(gen) / 3.0;  // force long decimal expansions
        if (i % 3 == 0) {
            row.id_value = value(gen) / 7.0;
            row.components = gen() % 50;
            row.giant_nodes = gen() % 50;
            row.giant_edges = gen() % 500;
            row.giant_weight = value(gen) / 11.0;
        }
        row.scouts = gen() % 5;
        row.events_employed = gen() % 60;
        row.events_onlooker = gen() % 60;
        row.events_scout = gen() % 5;
        series.push_back(row);
    }
    series.front().best_fitness = 0.1;  // classic non-representable decimal
    write_metrics_csv(series, path);
    CHECK(read_metrics_csv(path) == series);
}

TEST_CASE("events csv round-trips and rejects corruption") {
    TempDir dir("events");
    const auto path = dir.path / "e.csv";
    std::mt19937_64 gen(7);
    const auto events = testutil::random_event_log(gen, 9, 25);
    write_events_csv(events, path);
    CHECK(read_events_csv(path) == events);

    write_events_csv({}, path);
    CHECK(read_events_csv(path).empty());
    CHECK(slurp(path) == "iteration,influenced,influencer,layer\n");

    std::ofstream out(path);
    out << "iteration,influenced,influencer,layer\n1,2,3,X\n";
    out.close();
    CHECK_THROWS(read_events_csv(path));

    std::ofstream bad(path);
    bad << "wrong,header\n";
    bad.close();
    CHECK_THROWS(read_events_csv(path));
}

TEST_CASE("matrix file round-trips exactly with its header") {
    TempDir dir("matrix");
    const auto path = dir.path / "m.mat";
    std::mt19937_64 gen(99);
    CountMatrix m(6, 6);
    for (auto& v : m.reshaped()) v = static_cast<std::int64_t>(gen() % 1000);
    const MatrixFileHeader header{"O", 25, 51, 75, 6};
    write_matrix_file(m, header, path);
    const auto [back, h] = read_matrix_file(path);
    CHECK(back == m);
    CHECK(h.layer == "O");
    CHECK(h.window == 25);
    CHECK(h.begin_iteration == 51);
    CHECK(h.end_iteration == 75);
    CHECK(h.n == 6);

    CHECK_THROWS_AS(write_matrix_file(m, MatrixFileHeader{"O", 1, 1, 1, 5}, path),
                    std::invalid_argument);
}

TEST_CASE("matrix reader rejects truncated and trailing data") {
    TempDir dir("matrix_bad");
    const auto path = dir.path / "m.mat";
    std::ofstream out(path);
    out << "layer E\nwindow 1\nbegin_iteration 1\nend_iteration 1\nn 2\n1 2\n3\n";
    out.close();
    CHECK_THROWS(read_matrix_file(path));

    std::ofstream extra(path);
    extra << "layer E\nwindow 1\nbegin_iteration 1\nend_iteration 1\nn 1\n5\n9\n";
    extra.close();
    CHECK_THROWS(read_matrix_file(path));
}

TEST_CASE("format_double survives a parse round-trip") {
    std::mt19937_64 gen(123);
    std::uniform_real_distribution<double> value(-1e9, 1e9);
    for (int rep = 0; rep < 2000; ++rep) {
        const double v = value(gen) / 7.0;
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(std::stod(format_double(0.1)) == 0.1);
    CHECK(std::stod(format_double(1e-12)) == 1e-12);
}

TEST_CASE("heatmap gradient endpoints and monotone position") {
    CHECK(heatmap_color(0.0, 10.0) == std::array<std::uint8_t, 3>{0, 0, 128});
    CHECK(heatmap_color(10.0, 10.0) == std::array<std::uint8_t, 3>{128, 0, 0});
    CHECK(heatmap_color(5.0, 10.0) == std::array<std::uint8_t, 3>{0, 255, 0});
    CHECK(heatmap_color(3.0, 0.0) == std::array<std::uint8_t, 3>{0, 0, 128});
}

TEST_CASE("heatmap ppm bytes") {
    TempDir dir("ppm");
    const auto path = dir.path / "m.ppm";

    SUBCASE("zero matrix is uniform dark blue") {
        write_heatmap_ppm(Eigen::MatrixXd(Eigen::MatrixXd::Zero(3, 3)), path);
        const std::string bytes = slurp(path);
        const std::string header = "P6\n3 3\n255\n";
        CHECK(bytes.rfind(header, 0) == 0);
        const std::string body = bytes.substr(header.size());
        REQUIRE(body.size() == 27);
        for (std::size_t k = 0; k < body.size(); k += 3) {
            CHECK(static_cast<unsigned char>(body[k]) == 0);
            CHECK(static_cast<unsigned char>(body[k + 1]) == 0);
            CHECK(static_cast<unsigned char>(body[k + 2]) == 128);
        }
    }
    SUBCASE("diagonal matrix colors only the diagonal") {
        CountMatrix m = CountMatrix::Zero(4, 4);
        m.diagonal() << 3, 3, 3, 3;
        write_heatmap_ppm(m, path);
        const std::string body = slurp(path).substr(std::string("P6\n4 4\n255\n").size());
        REQUIRE(body.size() == 48);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                const auto* px =
                    reinterpret_cast<const unsigned char*>(body.data()) + (r * 4 + c) * 3;
                if (r == c) {
                    CHECK(px[0] == 128);  // dark red
                    CHECK(px[2] == 0);
                } else {
                    CHECK(px[2] == 128);  // dark blue
                }
            }
        }
    }
    SUBCASE("identical matrices give byte-identical files") {
        std::mt19937_64 gen(5);
        const auto m = testutil::random_symmetric_matrix(gen, 8);
        write_heatmap_ppm(m, path);
        const std::string first = slurp(path);
        write_heatmap_ppm(m, dir.path / "again.ppm");
        CHECK(slurp(dir.path / "again.ppm") == first);
    }
    SUBCASE("empty matrix is invalid") {
        CHECK_THROWS_AS(write_heatmap_ppm(Eigen::MatrixXd{}, path), std::invalid_argument);
    }
}
