#include "abcnet/bench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abcnet {

namespace {

void check_input(std::span<const double> x, const char* fn) {
    if (x.empty()) {
        throw std::invalid_argument(std::string(fn) + ": empty input vector");
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(fn) + ": non-finite component");
        }
    }
}

constexpr double kCanonicalLower = -5.12;
constexpr double kCanonicalUpper = 5.12;

}  // namespace

double evaluate_rastrigin(std::span<const double> x) {
    check_input(x, "evaluate_rastrigin");
    double sum = 0.0;
    for (double v : x) {
        sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
    }
    return sum;
}

double evaluate_sphere(std::span<const double> x) {
    check_input(x, "evaluate_sphere");
    double sum = 0.0;
    for (double v : x) {
        sum += v * v;
    }
    return sum;
}

ObjectiveFn objective_function(const std::string& name) {
    if (name == "rastrigin") return evaluate_rastrigin;
    if (name == "sphere") return evaluate_sphere;
    throw std::invalid_argument("unknown objective: " + name);
}

ObjectiveSpec make_objective(const std::string& name, std::size_t dimensions) {
    return make_objective(name, dimensions, kCanonicalLower, kCanonicalUpper);
}

ObjectiveSpec make_objective(const std::string& name, std::size_t dimensions,
                             double lower_bound, double upper_bound) {
    objective_function(name);  // validates the name
    if (dimensions < 1) {
        throw std::invalid_argument("objective dimensions must be >= 1");
    }
    if (!(lower_bound < upper_bound)) {
        throw std::invalid_argument("objective bounds require lower < upper");
    }
    return ObjectiveSpec{name, dimensions, lower_bound, upper_bound, 0.0};
}

}  // namespace abcnet
