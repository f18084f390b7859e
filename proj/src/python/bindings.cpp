#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "abcnet/engine.hpp"
#include "abcnet/harness.hpp"
#include "abcnet/netmetrics.hpp"

namespace py = pybind11;
using namespace abcnet;

namespace {

std::vector<double> to_vec(const py::iterable& xs) {
    std::vector<double> v;
    for (const auto& x : xs) {
        v.push_back(x.cast<double>());
    }
    return v;
}

}  // namespace

PYBIND11_MODULE(_abcnet, m) {
    m.doc() = "Artificial bee colony optimizer with interaction-network instrumentation";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ConfigError>(m, "ConfigError");

    m.def("evaluate_rastrigin",
          [](const py::iterable& x) { return evaluate_rastrigin(to_vec(x)); }, py::arg("x"));
    m.def("evaluate_sphere",
          [](const py::iterable& x) { return evaluate_sphere(to_vec(x)); }, py::arg("x"));

    py::class_<ObjectiveSpec>(m, "ObjectiveSpec")
        .def_readonly("name", &ObjectiveSpec::name)
        .def_readonly("dimensions", &ObjectiveSpec::dimensions)
        .def_readonly("lower_bound", &ObjectiveSpec::lower_bound)
        .def_readonly("upper_bound", &ObjectiveSpec::upper_bound)
        .def_readonly("optimum_value", &ObjectiveSpec::optimum_value)
        .def("__repr__", [](const ObjectiveSpec& s) {
            std::ostringstream os;
            os << "ObjectiveSpec(" << s.name << ", dim=" << s.dimensions << ", bounds=["
               << s.lower_bound << ", " << s.upper_bound << "])";
            return os.str();
        });
    m.def("make_objective",
          py::overload_cast<const std::string&, std::size_t>(&make_objective),
          py::arg("name"), py::arg("dimensions"));
    m.def("make_objective",
          py::overload_cast<const std::string&, std::size_t, double, double>(&make_objective),
          py::arg("name"), py::arg("dimensions"), py::arg("lower_bound"), py::arg("upper_bound"));

    py::enum_<Layer>(m, "Layer")
        .value("Employed", Layer::Employed)
        .value("Onlooker", Layer::Onlooker)
        .value("Scout", Layer::Scout);

    py::class_<InfluenceEvent>(m, "InfluenceEvent")
        .def(py::init([](std::uint32_t iteration, std::uint32_t influenced,
                         std::uint32_t influencer, Layer layer) {
                 return InfluenceEvent{iteration, influenced, influencer, layer};
             }),
             py::arg("iteration"), py::arg("influenced"), py::arg("influencer"),
             py::arg("layer"))
        .def_readonly("iteration", &InfluenceEvent::iteration)
        .def_readonly("influenced", &InfluenceEvent::influenced)
        .def_readonly("influencer", &InfluenceEvent::influencer)
        .def_readonly("layer", &InfluenceEvent::layer)
        .def("__repr__", [](const InfluenceEvent& e) {
            std::ostringstream os;
            os << "InfluenceEvent(t=" << e.iteration << ", " << e.influenced << " <- "
               << e.influencer << ", " << layer_char(e.layer) << ")";
            return os.str();
        });

    py::class_<FoodSource>(m, "FoodSource")
        .def_readonly("index", &FoodSource::index)
        .def_readonly("position", &FoodSource::position)
        .def_readonly("fitness_raw", &FoodSource::fitness_raw)
        .def_readonly("trials", &FoodSource::trials);

    py::class_<PhaseOutcome>(m, "PhaseOutcome")
        .def_readonly("events", &PhaseOutcome::events)
        .def_readonly("evaluations", &PhaseOutcome::evaluations)
        .def_readonly("improvements", &PhaseOutcome::improvements);

    py::class_<IterationRecord>(m, "IterationRecord")
        .def_readonly("iteration", &IterationRecord::iteration)
        .def_readonly("employed", &IterationRecord::employed)
        .def_readonly("onlooker", &IterationRecord::onlooker)
        .def_readonly("scout", &IterationRecord::scout)
        .def_readonly("best_fitness", &IterationRecord::best_fitness);

    py::class_<EngineOptions>(m, "EngineOptions")
        .def(py::init<>())
        .def_readwrite("limit", &EngineOptions::limit)
        .def_readwrite("evaluation_budget", &EngineOptions::evaluation_budget)
        .def_readwrite("clamp_to_bounds", &EngineOptions::clamp_to_bounds)
        .def_readwrite("record_onlooker_partner", &EngineOptions::record_onlooker_partner);

    py::class_<Colony>(m, "Colony")
        .def(py::init<ObjectiveSpec, std::size_t, std::uint64_t, EngineOptions>(),
             py::arg("spec"), py::arg("n_bees"), py::arg("seed"),
             py::arg("options") = EngineOptions{})
        .def("greedy_candidate",
             py::overload_cast<std::size_t, std::size_t>(&Colony::greedy_candidate),
             py::arg("i"), py::arg("j"))
        .def("roulette_probabilities", &Colony::roulette_probabilities)
        .def("employed_phase", py::overload_cast<>(&Colony::employed_phase))
        .def("onlooker_phase", py::overload_cast<>(&Colony::onlooker_phase))
        .def("scout_phase", py::overload_cast<>(&Colony::scout_phase))
        .def("run_iteration", &Colony::run_iteration)
        .def("run_to_budget", &Colony::run_to_budget,
             py::call_guard<py::gil_scoped_release>())
        .def("reset_source",
             [](Colony& c, std::size_t i, const py::iterable& position) {
                 c.reset_source(i, to_vec(position));
             },
             py::arg("i"), py::arg("position"))
        .def("event_log", &Colony::event_log)
        .def_property_readonly("spec", &Colony::spec)
        .def_property_readonly("n_bees", &Colony::n_bees)
        .def_property_readonly("sources",
                               [](const Colony& c) { return c.state().sources; })
        .def_property_readonly("iteration",
                               [](const Colony& c) { return c.state().iteration; })
        .def_property_readonly(
            "evaluations_used", [](const Colony& c) { return c.state().evaluations_used; })
        .def_property_readonly(
            "best_fitness_ever", [](const Colony& c) { return c.state().best_fitness_ever; })
        .def_property_readonly("best_position_ever", [](const Colony& c) {
            return c.state().best_position_ever;
        });

    m.def("fitness_transform", &fitness_transform, py::arg("raw_fitness"));
    m.def("roulette_probabilities_from",
          [](const py::iterable& raw) { return roulette_probabilities_from(to_vec(raw)); },
          py::arg("raw_fitness"));

    py::class_<LayeredWindowNetwork>(m, "LayeredWindowNetwork")
        .def_readonly("n", &LayeredWindowNetwork::n)
        .def_readonly("window", &LayeredWindowNetwork::window)
        .def_readonly("end_iteration", &LayeredWindowNetwork::end_iteration)
        .def_readonly("employed", &LayeredWindowNetwork::employed)
        .def_readonly("onlooker", &LayeredWindowNetwork::onlooker)
        .def_readonly("scout", &LayeredWindowNetwork::scout)
        .def_readonly("aggregated", &LayeredWindowNetwork::aggregated);

    m.def("iteration_matrix",
          [](const std::vector<InfluenceEvent>& events, std::size_t t, Layer layer,
             std::size_t n) { return iteration_matrix(events, t, layer, n); },
          py::arg("events"), py::arg("t"), py::arg("layer"), py::arg("n"));
    m.def("window_network",
          [](const std::vector<InfluenceEvent>& events, std::size_t t, std::size_t t_w,
             std::size_t n) { return window_network(events, t, t_w, n); },
          py::arg("events"), py::arg("t"), py::arg("t_w"), py::arg("n"));
    m.def("undirected_view",
          [](const CountMatrix& m_) { return undirected_view(m_); }, py::arg("m"));

    py::class_<SlidingWindowAccumulator>(m, "SlidingWindowAccumulator")
        .def(py::init<std::size_t, std::size_t>(), py::arg("n"), py::arg("window"))
        .def("push_iteration",
             [](SlidingWindowAccumulator& acc, const std::vector<InfluenceEvent>& events,
                std::size_t iteration) { acc.push_iteration(events, iteration); },
             py::arg("events"), py::arg("iteration"))
        .def("network", &SlidingWindowAccumulator::network,
             py::return_value_policy::reference_internal)
        .def("window_filled", &SlidingWindowAccumulator::window_filled);

    py::class_<DestructionCurve>(m, "DestructionCurve")
        .def_readonly("thresholds", &DestructionCurve::thresholds)
        .def_readonly("components_at", &DestructionCurve::components_at)
        .def_readonly("area", &DestructionCurve::area);

    py::class_<ComponentStats>(m, "ComponentStats")
        .def_readonly("components", &ComponentStats::components)
        .def_readonly("giant_nodes", &ComponentStats::giant_nodes)
        .def_readonly("giant_edges", &ComponentStats::giant_edges)
        .def_readonly("giant_weight", &ComponentStats::giant_weight)
        .def("__repr__", [](const ComponentStats& s) {
            std::ostringstream os;
            os << "ComponentStats(components=" << s.components << ", giant_nodes="
               << s.giant_nodes << ", giant_edges=" << s.giant_edges << ", giant_weight="
               << s.giant_weight << ")";
            return os.str();
        });

    m.def("weighted_degree", &weighted_degree, py::arg("u"));
    m.def("ccdf", [](const py::iterable& values) { return ccdf(to_vec(values)); },
          py::arg("values"));
    m.def("destruction_curve", &destruction_curve, py::arg("u"));
    m.def("component_stats", &component_stats, py::arg("u"));
    m.def("interaction_diversity",
          [](const std::vector<InfluenceEvent>& events, std::size_t t,
             const std::vector<std::size_t>& windows, std::size_t n) {
              return interaction_diversity(events, t, windows, n);
          },
          py::arg("events"), py::arg("t"), py::arg("windows"), py::arg("n"));
    m.def("window_component_stats",
          [](const std::vector<InfluenceEvent>& events, std::size_t t, std::size_t t_w,
             std::size_t n) { return window_component_stats(events, t, t_w, n); },
          py::arg("events"), py::arg("t"), py::arg("t_w"), py::arg("n"));
    m.def("window_destruction_area", &window_destruction_area, py::arg("net"));

    m.def("write_events_csv",
          [](const std::vector<InfluenceEvent>& events, const std::filesystem::path& path) {
              write_events_csv(events, path);
          },
          py::arg("events"), py::arg("path"));
    m.def("read_events_csv", &read_events_csv, py::arg("path"));

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("objective", &ExperimentConfig::objective)
        .def_readwrite("dimensions", &ExperimentConfig::dimensions)
        .def_readwrite("lower_bound", &ExperimentConfig::lower_bound)
        .def_readwrite("upper_bound", &ExperimentConfig::upper_bound)
        .def_readwrite("n_bees", &ExperimentConfig::n_bees)
        .def_readwrite("evaluation_budget", &ExperimentConfig::evaluation_budget)
        .def_readwrite("limit", &ExperimentConfig::limit)
        .def_readwrite("n_executions", &ExperimentConfig::n_executions)
        .def_readwrite("base_seed", &ExperimentConfig::base_seed)
        .def_readwrite("window_set", &ExperimentConfig::window_set)
        .def_readwrite("snapshot_fractions", &ExperimentConfig::snapshot_fractions)
        .def_readwrite("metric_stride", &ExperimentConfig::metric_stride)
        .def_readwrite("output_dir", &ExperimentConfig::output_dir)
        .def_readwrite("record_onlooker_partner", &ExperimentConfig::record_onlooker_partner)
        .def_readwrite("clamp_bounds", &ExperimentConfig::clamp_bounds)
        .def_readwrite("workers", &ExperimentConfig::workers)
        .def("validate", &ExperimentConfig::validate);

    py::class_<ExecutionResult>(m, "ExecutionResult")
        .def_readonly("index", &ExecutionResult::index)
        .def_readonly("seed", &ExecutionResult::seed)
        .def_readonly("ok", &ExecutionResult::ok)
        .def_readonly("iterations", &ExecutionResult::iterations)
        .def_readonly("evaluations", &ExecutionResult::evaluations)
        .def_readonly("best_fitness", &ExecutionResult::best_fitness)
        .def_readonly("error", &ExecutionResult::error);

    py::class_<CampaignSummary>(m, "CampaignSummary")
        .def_readonly("runs", &CampaignSummary::runs)
        .def_readonly("best_run", &CampaignSummary::best_run);

    m.def("load_config", &load_config, py::arg("path"));
    m.def("run_execution", &run_execution, py::arg("config"), py::arg("execution_index"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_campaign", &run_campaign, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
}
