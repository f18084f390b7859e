#include "abcnet/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace abcnet {

double fitness_transform(double raw_fitness) {
    if (raw_fitness >= 0.0) {
        return 1.0 / (1.0 + raw_fitness);
    }
    return 1.0 + std::abs(raw_fitness);
}

std::vector<double> roulette_probabilities_from(std::span<const double> raw_fitness) {
    std::vector<double> p(raw_fitness.size());
    double total = 0.0;
    for (std::size_t i = 0; i < raw_fitness.size(); ++i) {
        p[i] = fitness_transform(raw_fitness[i]);
        total += p[i];
    }
    for (double& v : p) {
        v /= total;
    }
    return p;
}

std::size_t roulette_spin(std::span<const double> probabilities, RandomSource& draws) {
    if (probabilities.empty()) {
        throw std::invalid_argument("roulette_spin: empty probability vector");
    }
    const double u = draws.uniform_real(0.0, 1.0);
    double cum = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cum += probabilities[i];
        if (u < cum) {
            return i;
        }
    }
    return probabilities.size() - 1;
}

Colony::Colony(ObjectiveSpec spec, std::size_t n_bees, std::uint64_t seed,
               EngineOptions options)
    : spec_(std::move(spec)),
      objective_(objective_function(spec_.name)),
      options_(options),
      state_{.rng = SeededRng(seed)} {
    if (n_bees < 2) {
        throw std::invalid_argument("colony needs at least 2 bees (movement partner)");
    }
    if (options_.limit < 1) {
        throw std::invalid_argument("limit must be >= 1");
    }
    if (options_.evaluation_budget < n_bees) {
        throw std::invalid_argument("evaluation budget cannot cover initialization");
    }
    state_.sources.reserve(n_bees);
    for (std::size_t i = 0; i < n_bees; ++i) {
        FoodSource source;
        source.index = i;
        source.position = draw_uniform_position(state_.rng);
        source.fitness_raw = eval_tracked(source.position);
        state_.sources.push_back(std::move(source));
    }
}

std::vector<double> Colony::draw_uniform_position(RandomSource& draws) const {
    std::vector<double> x(spec_.dimensions);
    for (double& v : x) {
        v = draws.uniform_real(spec_.lower_bound, spec_.upper_bound);
    }
    return x;
}

double Colony::eval_tracked(std::span<const double> x) {
    const double f = objective_(x);
    if (!std::isfinite(f)) {
        throw std::runtime_error("objective returned a non-finite value");
    }
    ++state_.evaluations_used;
    if (f < state_.best_fitness_ever) {
        state_.best_fitness_ever = f;
        state_.best_position_ever.assign(x.begin(), x.end());
    }
    return f;
}

std::vector<double> Colony::greedy_candidate(std::size_t i, std::size_t j,
                                             RandomSource& draws) const {
    if (i == j) {
        throw std::logic_error("greedy_candidate: source and partner must differ");
    }
    const auto& xi = state_.sources.at(i).position;
    const auto& xj = state_.sources.at(j).position;
    std::vector<double> v(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double phi = draws.uniform_real(-1.0, 1.0);
        v[k] = xi[k] + phi * (xi[k] - xj[k]);
        if (options_.clamp_to_bounds) {
            v[k] = std::clamp(v[k], spec_.lower_bound, spec_.upper_bound);
        }
    }
    return v;
}

std::vector<double> Colony::greedy_candidate(std::size_t i, std::size_t j) {
    return greedy_candidate(i, j, state_.rng);
}

std::vector<double> Colony::roulette_probabilities() const {
    std::vector<double> raw(state_.sources.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = state_.sources[i].fitness_raw;
    }
    return roulette_probabilities_from(raw);
}

PhaseOutcome Colony::employed_phase(RandomSource& draws) {
    PhaseOutcome out;
    const std::size_t n = state_.sources.size();
    const auto tag = static_cast<std::uint32_t>(state_.iteration + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = draws.uniform_excluding(n, i);
        std::vector<double> candidate = greedy_candidate(i, j, draws);
        const double f = eval_tracked(candidate);
        ++out.evaluations;
        FoodSource& source = state_.sources[i];
        if (f < source.fitness_raw) {
            source.position = std::move(candidate);
            source.fitness_raw = f;
            source.trials = 0;
            ++out.improvements;
            out.events.push_back({tag, static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(j), Layer::Employed});
        } else {
            ++source.trials;
        }
    }
    return out;
}

PhaseOutcome Colony::onlooker_phase(RandomSource& draws) {
    PhaseOutcome out;
    const std::size_t n = state_.sources.size();
    const auto tag = static_cast<std::uint32_t>(state_.iteration + 1);
    // Probabilities fixed at phase entry; accepted moves within the
    // phase do not re-weight later spins.
    const std::vector<double> p = roulette_probabilities();
    for (std::size_t o = 0; o < n; ++o) {
        const std::size_t s = roulette_spin(p, draws);
        const std::size_t j = draws.uniform_excluding(n, s);
        std::vector<double> candidate = greedy_candidate(s, j, draws);
        const double f = eval_tracked(candidate);
        ++out.evaluations;
        FoodSource& source = state_.sources[s];
        if (f < source.fitness_raw) {
            source.position = std::move(candidate);
            source.fitness_raw = f;
            source.trials = 0;
            ++out.improvements;
            out.events.push_back({tag, static_cast<std::uint32_t>(o),
                                  static_cast<std::uint32_t>(s), Layer::Onlooker});
            if (options_.record_onlooker_partner) {
                out.events.push_back({tag, static_cast<std::uint32_t>(o),
                                      static_cast<std::uint32_t>(j), Layer::Onlooker});
            }
        } else {
            ++source.trials;
        }
    }
    return out;
}

PhaseOutcome Colony::scout_phase(RandomSource& draws) {
    PhaseOutcome out;
    const auto tag = static_cast<std::uint32_t>(state_.iteration + 1);
    for (FoodSource& source : state_.sources) {
        if (source.trials <= options_.limit) {
            continue;
        }
        source.position = draw_uniform_position(draws);
        source.fitness_raw = eval_tracked(source.position);
        source.trials = 0;
        ++out.evaluations;
        const auto i = static_cast<std::uint32_t>(source.index);
        out.events.push_back({tag, i, i, Layer::Scout});
    }
    return out;
}

PhaseOutcome Colony::employed_phase() { return employed_phase(state_.rng); }
PhaseOutcome Colony::onlooker_phase() { return onlooker_phase(state_.rng); }
PhaseOutcome Colony::scout_phase() { return scout_phase(state_.rng); }

std::uint64_t Colony::evaluations_remaining() const {
    return options_.evaluation_budget - state_.evaluations_used;
}

std::optional<IterationRecord> Colony::run_iteration() {
    // Worst case for one iteration is 3N evaluations (employed N,
    // onlooker N, up to N scouts); starting with less could overrun the
    // budget mid-iteration.
    const std::uint64_t worst_case = 3 * static_cast<std::uint64_t>(state_.sources.size());
    if (evaluations_remaining() < worst_case) {
        return std::nullopt;
    }
    IterationRecord record;
    record.iteration = state_.iteration + 1;
    record.employed = employed_phase(state_.rng);
    record.onlooker = onlooker_phase(state_.rng);
    record.scout = scout_phase(state_.rng);
    record.best_fitness = state_.best_fitness_ever;
    ++state_.iteration;
    for (const auto* outcome : {&record.employed, &record.onlooker, &record.scout}) {
        event_log_.insert(event_log_.end(), outcome->events.begin(), outcome->events.end());
    }
    return record;
}

std::size_t Colony::run_to_budget() {
    std::size_t iterations = 0;
    while (run_iteration()) {
        ++iterations;
    }
    return iterations;
}

void Colony::reset_source(std::size_t i, std::span<const double> position) {
    FoodSource& source = state_.sources.at(i);
    if (position.size() != spec_.dimensions) {
        throw std::invalid_argument("reset_source: wrong position dimension");
    }
    source.position.assign(position.begin(), position.end());
    source.fitness_raw = eval_tracked(source.position);
    source.trials = 0;
}

}  // namespace abcnet
