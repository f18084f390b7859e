#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abcnet/harness.hpp"
#include "abcnet/netmetrics.hpp"

namespace {

using namespace abcnet;

std::size_t infer_bees(const std::vector<InfluenceEvent>& events, std::size_t override_n) {
    if (override_n > 0) {
        return override_n;
    }
    std::size_t max_index = 0;
    if (events.empty()) {
        throw ConfigError("event log is empty; pass --bees to set the swarm size");
    }
    for (const InfluenceEvent& e : events) {
        max_index = std::max({max_index, static_cast<std::size_t>(e.influenced),
                              static_cast<std::size_t>(e.influencer)});
    }
    return max_index + 1;
}

std::size_t final_iteration(const std::vector<InfluenceEvent>& events) {
    std::size_t t = 0;
    for (const InfluenceEvent& e : events) {
        t = std::max(t, static_cast<std::size_t>(e.iteration));
    }
    return t;
}

int cmd_run(const std::string& config_path) {
    const ExperimentConfig config = load_config(config_path);
    const CampaignSummary summary = run_campaign(config);
    std::size_t failed = 0;
    for (const ExecutionResult& r : summary.runs) {
        if (r.ok) {
            std::printf("run %zu: seed=%llu iterations=%zu evaluations=%llu best=%.6g\n",
                        r.index, static_cast<unsigned long long>(r.seed), r.iterations,
                        static_cast<unsigned long long>(r.evaluations), r.best_fitness);
        } else {
            std::fprintf(stderr, "run %zu: FAILED: %s\n", r.index, r.error.c_str());
            ++failed;
        }
    }
    if (summary.best_run) {
        std::printf("best run: %zu (fitness %.6g)\n", *summary.best_run,
                    summary.runs[*summary.best_run].best_fitness);
    }
    if (failed > 0) {
        std::fprintf(stderr, "%zu run(s) failed\n", failed);
        return 2;
    }
    return 0;
}

int cmd_analyze(const std::string& events_path, std::vector<std::size_t> windows,
                const std::string& out_dir, std::size_t bees, std::size_t stride) {
    const std::vector<InfluenceEvent> events = read_events_csv(events_path);
    const std::size_t n = infer_bees(events, bees);
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
    if (windows.empty()) {
        throw ConfigError("--windows must list at least one window");
    }
    const std::size_t t_final = final_iteration(events);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    {
        // Bucket events by iteration and slide the windows over them;
        // recomputing every window from scratch per iteration would be
        // quadratic in the run length.
        std::vector<std::vector<InfluenceEvent>> buckets(t_final + 1);
        for (const InfluenceEvent& e : events) {
            if (e.iteration < 1) {
                throw std::runtime_error("event log contains an iteration < 1");
            }
            buckets[e.iteration].push_back(e);
        }
        std::vector<SlidingWindowAccumulator> accs;
        accs.reserve(windows.size());
        for (std::size_t w : windows) {
            accs.emplace_back(n, w);
        }
        std::ofstream out(dir / "id_series.csv");
        out << "iteration,id_value\n";
        std::vector<double> areas(windows.size());
        for (std::size_t t = 1; t <= t_final; ++t) {
            for (auto& acc : accs) {
                acc.push_iteration(buckets[t], t);
            }
            if (t < windows.back() || (t - windows.back()) % stride != 0) {
                continue;
            }
            for (std::size_t i = 0; i < accs.size(); ++i) {
                areas[i] = window_destruction_area(accs[i].network());
            }
            out << t << ',' << format_double(interaction_diversity_from_areas(areas, n))
                << '\n';
        }
        if (!out.flush()) {
            throw std::runtime_error("write failed: " + (dir / "id_series.csv").string());
        }
    }
    {
        std::ofstream out(dir / "window_stats.csv");
        out << "t,t_w,components,giant_nodes,giant_edges,giant_weight\n";
        for (std::size_t t_w : windows) {
            if (t_w > t_final) continue;
            const ComponentStats stats = window_component_stats(events, t_final, t_w, n);
            out << t_final << ',' << t_w << ',' << stats.components << ',' << stats.giant_nodes
                << ',' << stats.giant_edges << ',' << format_double(stats.giant_weight) << '\n';
        }
        if (!out.flush()) {
            throw std::runtime_error("write failed: " + (dir / "window_stats.csv").string());
        }
    }
    {
        // Degree CCDF of the full-history aggregated network.
        const LayeredWindowNetwork net = window_network(events, t_final, t_final, n);
        const Eigen::VectorXd degrees =
            weighted_degree(undirected_view(net.aggregated).cast<double>());
        const std::vector<double> values(degrees.data(), degrees.data() + degrees.size());
        std::ofstream out(dir / "degree_ccdf.csv");
        out << "degree,ccdf\n";
        for (const auto& [degree, fraction] : ccdf(values)) {
            out << format_double(degree) << ',' << format_double(fraction) << '\n';
        }
        if (!out.flush()) {
            throw std::runtime_error("write failed: " + (dir / "degree_ccdf.csv").string());
        }
    }
    std::printf("analyzed %zu events (n=%zu, final iteration %zu) into %s\n", events.size(), n,
                t_final, out_dir.c_str());
    return 0;
}

int cmd_snapshot(const std::string& events_path, std::size_t at, std::size_t window,
                 const std::string& layer, const std::string& out_path, std::size_t bees) {
    const std::vector<InfluenceEvent> events = read_events_csv(events_path);
    const std::size_t n = infer_bees(events, bees);
    const LayeredWindowNetwork net = window_network(events, at, window, n);
    const CountMatrix* m = nullptr;
    if (layer == "E") m = &net.employed;
    else if (layer == "O") m = &net.onlooker;
    else if (layer == "S") m = &net.scout;
    else if (layer == "A") m = &net.aggregated;
    else throw ConfigError("--layer must be one of E, O, S, A");
    MatrixFileHeader header{layer, window, at - window + 1, at, n};
    write_matrix_file(*m, header, out_path);
    std::printf("wrote %s (layer %s, window %zu, t=%zu)\n", out_path.c_str(), layer.c_str(),
                window, at);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artificial bee colony optimizer with interaction-network instrumentation"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Execute an experiment campaign from a config file");
    run->add_option("--config", config_path, "Path to a key = value config file")->required();

    std::string events_path, out_dir;
    std::vector<std::size_t> windows{1, 5, 10, 25, 50, 100};
    std::size_t bees = 0, stride = 1;
    auto* analyze = app.add_subcommand("analyze", "Recompute metrics from a stored event log");
    analyze->add_option("--events", events_path, "Events CSV produced by a run")->required();
    analyze->add_option("--windows", windows, "Comma-separated time windows")
        ->delimiter(',');
    analyze->add_option("--out", out_dir, "Output directory")->required();
    analyze->add_option("--bees", bees, "Swarm size (default: inferred from the log)");
    analyze->add_option("--stride", stride, "Compute the ID series every k iterations");

    std::string snap_events, snap_layer = "A", snap_out;
    std::size_t snap_at = 0, snap_window = 1, snap_bees = 0;
    auto* snapshot = app.add_subcommand("snapshot", "Emit one windowed adjacency matrix");
    snapshot->add_option("--events", snap_events, "Events CSV produced by a run")->required();
    snapshot->add_option("--at", snap_at, "End iteration t of the window")->required();
    snapshot->add_option("--window", snap_window, "Window size t_w")->required();
    snapshot->add_option("--layer", snap_layer, "Layer: E, O, S or A (aggregated)");
    snapshot->add_option("--out", snap_out, "Output matrix file")->required();
    snapshot->add_option("--bees", snap_bees, "Swarm size (default: inferred from the log)");

    try {
        app.parse(argc, argv);
        if (*run) {
            return cmd_run(config_path);
        }
        if (*analyze) {
            if (stride < 1) throw abcnet::ConfigError("--stride must be >= 1");
            return cmd_analyze(events_path, windows, out_dir, bees, stride);
        }
        if (*snapshot) {
            return cmd_snapshot(snap_events, snap_at, snap_window, snap_layer, snap_out,
                                snap_bees);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const abcnet::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
