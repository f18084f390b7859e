#include "abcnet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "abcnet/netmetrics.hpp"

namespace abcnet {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::string run_prefix(std::size_t index) {
    return "run" + std::to_string(index);
}

std::string fraction_tag(double fraction) {
    const int pct = static_cast<int>(std::lround(fraction * 100.0));
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%03d", pct);
    return buf;
}

/// Quote a CSV field if it contains a comma, quote, or newline.
std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

struct Snapshotter {
    const ExperimentConfig& config;
    std::filesystem::path dir;
    std::string prefix;
    std::vector<double> pending;  // fractions not yet written, ascending

    explicit Snapshotter(const ExperimentConfig& cfg, std::filesystem::path out,
                         std::string pfx)
        : config(cfg), dir(std::move(out)), prefix(std::move(pfx)),
          pending(cfg.snapshot_fractions) {
        std::sort(pending.begin(), pending.end());
        pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    }

    void write(const LayeredWindowNetwork& net, double fraction) {
        const std::string tag = fraction_tag(fraction);
        const std::size_t t = net.end_iteration;
        const struct {
            const char* name;
            const CountMatrix& m;
        } layers[] = {{"E", net.employed}, {"O", net.onlooker},
                      {"S", net.scout}, {"A", net.aggregated}};
        for (const auto& layer : layers) {
            MatrixFileHeader header{layer.name, t, 1, t, net.n};
            const std::string stem = prefix + "_snap" + tag + "_" + layer.name;
            write_matrix_file(layer.m, header, dir / (stem + ".mat"));
            write_heatmap_ppm(layer.m, dir / (stem + ".ppm"));
        }
    }

    /// Emit every pending snapshot whose evaluation fraction has been
    /// reached; `final` flushes the rest at the end of the run.
    void maybe_write(const LayeredWindowNetwork& cumulative, std::uint64_t evaluations,
                     bool final) {
        while (!pending.empty()) {
            const double fraction = pending.front();
            const auto trigger = static_cast<std::uint64_t>(
                std::ceil(fraction * static_cast<double>(config.evaluation_budget)));
            if (!final && evaluations < trigger) {
                break;
            }
            write(cumulative, fraction);
            pending.erase(pending.begin());
        }
    }
};

}  // namespace

ExecutionResult run_execution(const ExperimentConfig& config, std::size_t execution_index) {
    config.validate();
    const std::uint64_t seed = config.base_seed + execution_index;
    ExecutionResult result;
    result.index = execution_index;
    result.seed = seed;

    EngineOptions options;
    options.limit = config.limit;
    options.evaluation_budget = config.evaluation_budget;
    options.clamp_to_bounds = config.clamp_bounds;
    options.record_onlooker_partner = config.record_onlooker_partner;
    Colony colony(config.objective_spec(), config.n_bees, seed, options);

    const std::vector<std::size_t> windows = sorted_unique(config.window_set);
    std::vector<SlidingWindowAccumulator> window_accs;
    window_accs.reserve(windows.size());
    for (std::size_t w : windows) {
        window_accs.emplace_back(config.n_bees, w);
    }
    SlidingWindowAccumulator cumulative(config.n_bees, SlidingWindowAccumulator::kCumulative);
    Snapshotter snapshots(config, config.output_dir, run_prefix(execution_index));

    MetricsSeries series;
    std::vector<InfluenceEvent> iteration_events;
    while (auto record = colony.run_iteration()) {
        const std::size_t t = record->iteration;
        iteration_events.clear();
        for (const auto* outcome : {&record->employed, &record->onlooker, &record->scout}) {
            iteration_events.insert(iteration_events.end(), outcome->events.begin(),
                                    outcome->events.end());
        }
        for (auto& acc : window_accs) {
            acc.push_iteration(iteration_events, t);
        }
        cumulative.push_iteration(iteration_events, t);

        MetricsRow row;
        row.iteration = t;
        row.best_fitness = record->best_fitness;
        row.scouts = record->scout.evaluations;
        row.events_employed = record->employed.events.size();
        row.events_onlooker = record->onlooker.events.size();
        row.events_scout = record->scout.events.size();
        if (t % config.metric_stride == 0) {
            if (window_accs.front().window_filled()) {
                const ComponentStats stats = component_stats(
                    undirected_view(window_accs.front().network().aggregated).cast<double>());
                row.components = stats.components;
                row.giant_nodes = stats.giant_nodes;
                row.giant_edges = stats.giant_edges;
                row.giant_weight = stats.giant_weight;
            }
            if (window_accs.back().window_filled()) {
                std::vector<double> areas;
                areas.reserve(window_accs.size());
                for (const auto& acc : window_accs) {
                    areas.push_back(window_destruction_area(acc.network()));
                }
                row.id_value = interaction_diversity_from_areas(areas, config.n_bees);
            }
        }
        series.push_back(row);
        snapshots.maybe_write(cumulative.network(), colony.state().evaluations_used, false);
    }
    if (colony.state().iteration > 0) {
        snapshots.maybe_write(cumulative.network(), colony.state().evaluations_used, true);
    }

    const auto prefix = run_prefix(execution_index);
    write_events_csv(colony.event_log(), config.output_dir / (prefix + "_events.csv"));
    write_metrics_csv(series, config.output_dir / (prefix + "_metrics.csv"));

    result.ok = true;
    result.iterations = colony.state().iteration;
    result.evaluations = colony.state().evaluations_used;
    result.best_fitness = colony.state().best_fitness_ever;
    return result;
}

namespace {

void write_summary_csv(const std::vector<ExecutionResult>& runs,
                       const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << "run,seed,status,iterations,evaluations,best_fitness,error\n";
    for (const ExecutionResult& r : runs) {
        out << r.index << ',' << r.seed << ',' << (r.ok ? "ok" : "failed") << ','
            << r.iterations << ',' << r.evaluations << ','
            << (r.ok ? format_double(r.best_fitness) : std::string()) << ','
            << csv_quote(r.error) << '\n';
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

void write_best_run_sweep(const ExperimentConfig& config, std::size_t best_index,
                          const std::filesystem::path& path) {
    const auto events_path =
        config.output_dir / (run_prefix(best_index) + "_events.csv");
    const std::vector<InfluenceEvent> events = read_events_csv(events_path);
    std::size_t t_final = 0;
    for (const InfluenceEvent& e : events) {
        t_final = std::max(t_final, static_cast<std::size_t>(e.iteration));
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << "t,t_w,components,giant_nodes,giant_edges,giant_weight\n";
    for (std::size_t t_w : sorted_unique(config.window_set)) {
        if (t_w > t_final) continue;
        const ComponentStats stats = window_component_stats(events, t_final, t_w, config.n_bees);
        out << t_final << ',' << t_w << ',' << stats.components << ',' << stats.giant_nodes
            << ',' << stats.giant_edges << ',' << format_double(stats.giant_weight) << '\n';
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace

CampaignSummary run_campaign(const ExperimentConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.output_dir);

    CampaignSummary summary;
    summary.runs.resize(config.n_executions);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t index = next.fetch_add(1);
            if (index >= config.n_executions) {
                return;
            }
            try {
                summary.runs[index] = run_execution(config, index);
            } catch (const std::exception& e) {
                ExecutionResult failed;
                failed.index = index;
                failed.seed = config.base_seed + index;
                failed.ok = false;
                failed.error = e.what();
                summary.runs[index] = failed;
            }
        }
    };

    const std::size_t n_workers = std::min(config.workers, config.n_executions);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i) {
            threads.emplace_back(worker);
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    for (const ExecutionResult& r : summary.runs) {
        if (!r.ok) continue;
        if (!summary.best_run || r.best_fitness < summary.runs[*summary.best_run].best_fitness) {
            summary.best_run = r.index;
        }
    }
    write_summary_csv(summary.runs, config.output_dir / "summary.csv");
    if (summary.best_run && summary.runs[*summary.best_run].iterations > 0) {
        write_best_run_sweep(config, *summary.best_run,
                             config.output_dir / "window_sweep_best.csv");
    }
    return summary;
}

}  // namespace abcnet
