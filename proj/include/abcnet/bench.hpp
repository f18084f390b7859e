#pragma once

#include <span>
#include <string>

namespace abcnet {

/// Description of a benchmark objective: name, dimensionality, uniform
/// per-dimension search bounds, and the known optimum value.
struct ObjectiveSpec {
    std::string name;
    std::size_t dimensions = 0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double optimum_value = 0.0;
};

using ObjectiveFn = double (*)(std::span<const double>);

/// Rastrigin: sum_k (x_k^2 - 10 cos(2 pi x_k) + 10). Non-negative,
/// multimodal, optimum 0 at the origin.
/// Throws std::invalid_argument on an empty or non-finite input.
double evaluate_rastrigin(std::span<const double> x);

/// Sphere: sum_k x_k^2. Cheap unimodal function for engine tests.
/// Throws std::invalid_argument on an empty or non-finite input.
double evaluate_sphere(std::span<const double> x);

/// Resolve an objective by name ("rastrigin" or "sphere").
/// Throws std::invalid_argument for unknown names.
ObjectiveFn objective_function(const std::string& name);

/// Build an ObjectiveSpec with the canonical [-5.12, 5.12] bounds.
ObjectiveSpec make_objective(const std::string& name, std::size_t dimensions);

/// Build an ObjectiveSpec with explicit bounds.
/// Throws std::invalid_argument unless lower < upper and dimensions >= 1.
ObjectiveSpec make_objective(const std::string& name, std::size_t dimensions,
                             double lower_bound, double upper_bound);

}  // namespace abcnet
