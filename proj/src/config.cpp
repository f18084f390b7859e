#include <algorithm>
#include <fstream>
#include <sstream>

#include "abcnet/harness.hpp"

namespace abcnet {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

class ValueParser {
public:
    ValueParser(std::string key, std::string value)
        : key_(std::move(key)), value_(std::move(value)) {}

    std::uint64_t as_uint() const {
        try {
            std::size_t pos = 0;
            if (!value_.empty() && value_[0] == '-') throw std::invalid_argument("");
            const std::uint64_t v = std::stoull(value_, &pos);
            if (pos != value_.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key_ + "': expected a non-negative integer, got '" +
                              value_ + "'");
        }
    }

    double as_double() const {
        try {
            std::size_t pos = 0;
            const double v = std::stod(value_, &pos);
            if (pos != value_.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key_ + "': expected a number, got '" + value_ + "'");
        }
    }

    bool as_bool() const {
        if (value_ == "true" || value_ == "1" || value_ == "yes" || value_ == "on") return true;
        if (value_ == "false" || value_ == "0" || value_ == "no" || value_ == "off") return false;
        throw ConfigError("config key '" + key_ + "': expected true/false, got '" + value_ + "'");
    }

    std::vector<std::size_t> as_uint_list() const {
        std::vector<std::size_t> out;
        for (const std::string& part : split_list(value_)) {
            out.push_back(static_cast<std::size_t>(ValueParser(key_, part).as_uint()));
        }
        if (out.empty()) {
            throw ConfigError("config key '" + key_ + "': expected a comma-separated list");
        }
        return out;
    }

    std::vector<double> as_double_list() const {
        std::vector<double> out;
        for (const std::string& part : split_list(value_)) {
            out.push_back(ValueParser(key_, part).as_double());
        }
        if (out.empty()) {
            throw ConfigError("config key '" + key_ + "': expected a comma-separated list");
        }
        return out;
    }

    const std::string& raw() const { return value_; }

private:
    std::string key_;
    std::string value_;
};

}  // namespace

ObjectiveSpec ExperimentConfig::objective_spec() const {
    ObjectiveSpec spec = make_objective(objective, dimensions);
    if (lower_bound || upper_bound) {
        spec = make_objective(objective, dimensions, lower_bound.value_or(spec.lower_bound),
                              upper_bound.value_or(spec.upper_bound));
    }
    return spec;
}

void ExperimentConfig::validate() const {
    try {
        objective_spec();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (n_bees < 2) throw ConfigError("n_bees must be >= 2");
    if (evaluation_budget < n_bees) {
        throw ConfigError("evaluation_budget must cover initialization (>= n_bees)");
    }
    if (limit < 1) throw ConfigError("limit must be >= 1");
    if (n_executions < 1) throw ConfigError("n_executions must be >= 1");
    if (window_set.empty()) throw ConfigError("window_set must not be empty");
    for (std::size_t w : window_set) {
        if (w < 1) throw ConfigError("window_set entries must be >= 1");
    }
    if (metric_stride < 1) throw ConfigError("metric_stride must be >= 1");
    for (double f : snapshot_fractions) {
        if (!(f > 0.0 && f <= 1.0)) {
            throw ConfigError("snapshot_fractions must lie in (0, 1]");
        }
    }
    if (workers < 1) throw ConfigError("workers must be >= 1");
    if (output_dir.empty()) throw ConfigError("output_dir is required");
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    ExperimentConfig config;
    bool have_budget = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const ValueParser value(key, trim(line.substr(eq + 1)));

        if (key == "objective") {
            config.objective = value.raw();
        } else if (key == "dimensions") {
            config.dimensions = static_cast<std::size_t>(value.as_uint());
        } else if (key == "lower_bound") {
            config.lower_bound = value.as_double();
        } else if (key == "upper_bound") {
            config.upper_bound = value.as_double();
        } else if (key == "n_bees") {
            config.n_bees = static_cast<std::size_t>(value.as_uint());
        } else if (key == "evaluation_budget") {
            config.evaluation_budget = value.as_uint();
            have_budget = true;
        } else if (key == "limit") {
            config.limit = static_cast<std::size_t>(value.as_uint());
        } else if (key == "n_executions") {
            config.n_executions = static_cast<std::size_t>(value.as_uint());
        } else if (key == "base_seed") {
            config.base_seed = value.as_uint();
        } else if (key == "window_set") {
            config.window_set = value.as_uint_list();
        } else if (key == "snapshot_fractions") {
            config.snapshot_fractions = value.as_double_list();
        } else if (key == "metric_stride") {
            config.metric_stride = static_cast<std::size_t>(value.as_uint());
        } else if (key == "output_dir") {
            config.output_dir = value.raw();
        } else if (key == "record_onlooker_partner") {
            config.record_onlooker_partner = value.as_bool();
        } else if (key == "clamp_bounds") {
            config.clamp_bounds = value.as_bool();
        } else if (key == "workers") {
            config.workers = static_cast<std::size_t>(value.as_uint());
        } else {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": unknown config key '" + key + "'");
        }
    }
    if (!have_budget) {
        throw ConfigError("config is missing required key 'evaluation_budget'");
    }
    config.validate();
    return config;
}

}  // namespace abcnet
