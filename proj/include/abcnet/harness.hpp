#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abcnet/engine.hpp"
#include "abcnet/export.hpp"

namespace abcnet {

/// Invalid configuration (file syntax, unknown keys, bad values).
/// The CLI maps this to exit code 1; other failures exit 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string objective = "rastrigin";
    std::size_t dimensions = 100;
    std::optional<double> lower_bound;  // default: objective's canonical bounds
    std::optional<double> upper_bound;
    std::size_t n_bees = 50;
    std::uint64_t evaluation_budget = 0;
    std::size_t limit = 100;
    std::size_t n_executions = 1;
    std::uint64_t base_seed = 42;
    std::vector<std::size_t> window_set = {1, 5, 10, 25, 50, 100};
    std::vector<double> snapshot_fractions = {0.25, 0.5, 1.0};
    std::size_t metric_stride = 1;
    std::filesystem::path output_dir;
    bool record_onlooker_partner = false;
    bool clamp_bounds = true;
    std::size_t workers = 1;

    ObjectiveSpec objective_spec() const;
    void validate() const;  // throws ConfigError
};

/// Parse a key = value config file. Blank lines and '#' comments are
/// skipped; unknown keys are errors. Key names match the struct fields
/// (see README for the full reference).
ExperimentConfig load_config(const std::filesystem::path& path);

struct ExecutionResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::size_t iterations = 0;
    std::uint64_t evaluations = 0;
    double best_fitness = 0.0;
    std::string error;
};

struct CampaignSummary {
    std::vector<ExecutionResult> runs;
    std::optional<std::size_t> best_run;  // lowest final fitness among ok runs
};

/// One seeded execution (seed = base_seed + index): runs the colony to
/// its budget, records a metrics row per iteration (ID and component
/// stats every metric_stride iterations once the windows are filled),
/// and writes run<k>_events.csv, run<k>_metrics.csv plus cumulative
/// per-layer matrix/heatmap snapshots at the configured budget
/// fractions. Deterministic per (config, index).
ExecutionResult run_execution(const ExperimentConfig& config, std::size_t execution_index);

/// Executes all runs (across `workers` threads; per-run outputs are
/// independent files, so parallel and serial campaigns produce identical
/// bytes), writes summary.csv, and computes a window sweep of component
/// stats for the best run (window_sweep_best.csv). A failed run is
/// recorded in the summary and does not stop the campaign.
CampaignSummary run_campaign(const ExperimentConfig& config);

}  // namespace abcnet
