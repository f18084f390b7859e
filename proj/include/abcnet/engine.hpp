#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "abcnet/bench.hpp"
#include "abcnet/events.hpp"
#include "abcnet/rng.hpp"

namespace abcnet {

/// A candidate solution; its index doubles as the bee identity.
struct FoodSource {
    std::size_t index = 0;
    std::vector<double> position;
    double fitness_raw = 0.0;   // objective value, lower is better
    std::size_t trials = 0;     // consecutive failed improvements
};

struct ColonyState {
    std::vector<FoodSource> sources;
    std::size_t iteration = 0;          // completed iterations
    std::uint64_t evaluations_used = 0;
    double best_fitness_ever = std::numeric_limits<double>::infinity();
    std::vector<double> best_position_ever;
    SeededRng rng;
};

/// Events plus bookkeeping for one phase. With default options,
/// improvements equals the number of events emitted by the employed and
/// onlooker phases (success-gated edges); record_onlooker_partner adds a
/// second event per accepted onlooker move.
struct PhaseOutcome {
    std::vector<InfluenceEvent> events;
    std::size_t evaluations = 0;
    std::size_t improvements = 0;
};

struct IterationRecord {
    std::size_t iteration = 0;  // 1-based
    PhaseOutcome employed;
    PhaseOutcome onlooker;
    PhaseOutcome scout;
    double best_fitness = 0.0;  // best-ever after this iteration
};

struct EngineOptions {
    std::size_t limit = 100;    // trials threshold before a source scouts
    std::uint64_t evaluation_budget = std::numeric_limits<std::uint64_t>::max();
    bool clamp_to_bounds = true;
    bool record_onlooker_partner = false;
};

/// Minimization-adapted fitness for the roulette wheel: 1/(1+f) for
/// f >= 0, 1+|f| otherwise. Strictly positive, higher is better.
double fitness_transform(double raw_fitness);

/// Normalized roulette probabilities p_i = fit(i) / sum_k fit(k).
std::vector<double> roulette_probabilities_from(std::span<const double> raw_fitness);

/// Select an index by cumulative-sum walk over `probabilities` with one
/// uniform_real(0, 1) draw. Falls back to the last index if rounding
/// leaves the draw above the accumulated total.
std::size_t roulette_spin(std::span<const double> probabilities, RandomSource& draws);

/// Seeded ABC colony over one objective. One iteration runs the
/// employed, onlooker, and scout phases in order; every accepted move
/// emits one InfluenceEvent into the run's event log. A fixed seed makes
/// the whole run (positions, fitness, events) bit-reproducible.
///
/// Draw order per iteration, one SeededRng stream for the run:
///   employed:  per source i in order: partner j (one uniform_excluding),
///              then D phi values in [-1, 1)
///   onlooker:  per slot o in order: roulette spin (one uniform_real),
///              partner j != s, then D phi values
///   scout:     per exhausted source in index order: D position values
class Colony {
public:
    /// Draws n_bees uniform positions in bounds and evaluates each once.
    /// Throws std::invalid_argument if n_bees < 2 (the movement rule
    /// needs a partner) or the budget cannot cover initialization.
    Colony(ObjectiveSpec spec, std::size_t n_bees, std::uint64_t seed,
           EngineOptions options = {});

    /// New position for source i guided by partner j (Eq.-style blend:
    /// v_k = x_ik + phi_k (x_ik - x_jk), phi uniform in [-1, 1) per
    /// dimension), clamped to bounds unless configured otherwise.
    /// Throws std::logic_error if i == j.
    std::vector<double> greedy_candidate(std::size_t i, std::size_t j,
                                         RandomSource& draws) const;
    std::vector<double> greedy_candidate(std::size_t i, std::size_t j);

    std::vector<double> roulette_probabilities() const;

    PhaseOutcome employed_phase(RandomSource& draws);
    PhaseOutcome employed_phase();

    PhaseOutcome onlooker_phase(RandomSource& draws);
    PhaseOutcome onlooker_phase();

    PhaseOutcome scout_phase(RandomSource& draws);
    PhaseOutcome scout_phase();

    /// Runs one full iteration and appends its events to the event log.
    /// Returns nullopt (and does nothing) once the remaining budget
    /// cannot cover a worst-case iteration (3N evaluations), so
    /// evaluations_used never exceeds the budget at iteration boundaries.
    std::optional<IterationRecord> run_iteration();

    /// Convenience: run_iteration until the budget is exhausted.
    /// Returns the number of iterations executed.
    std::size_t run_to_budget();

    /// Overwrite source i with `position` (evaluated, trials reset).
    /// Counts as one objective evaluation.
    void reset_source(std::size_t i, std::span<const double> position);

    const ColonyState& state() const { return state_; }
    const ObjectiveSpec& spec() const { return spec_; }
    const EngineOptions& options() const { return options_; }
    const std::vector<InfluenceEvent>& event_log() const { return event_log_; }
    std::size_t n_bees() const { return state_.sources.size(); }
    std::uint64_t evaluations_remaining() const;

private:
    double eval_tracked(std::span<const double> x);
    std::vector<double> draw_uniform_position(RandomSource& draws) const;

    ObjectiveSpec spec_;
    ObjectiveFn objective_;
    EngineOptions options_;
    ColonyState state_;
    std::vector<InfluenceEvent> event_log_;
};

}  // namespace abcnet
