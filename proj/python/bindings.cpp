#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "drgame/catalog.hpp"
#include "drgame/config.hpp"
#include "drgame/io.hpp"
#include "drgame/scenarios.hpp"

namespace py = pybind11;
using namespace drgame;

namespace {

py::dict summary_dict(const ScenarioResult& r) {
  py::dict d;
  d["scenario"] = r.scenario;
  d["seed"] = r.seed;
  d["total_cost"] = r.total_cost;
  d["total_discomfort"] = r.total_discomfort;
  d["total_revenue"] = r.total_revenue;
  d["load"] = r.load.energy_kwh;
  d["price"] = r.price.price;
  d["rounds_used"] = r.rounds_used;
  d["converged"] = r.converged;
  d["max_deviation_gain"] = r.max_deviation_gain;
  return d;
}

}  // namespace

PYBIND11_MODULE(_drgame, m) {
  m.doc() = "Demand-response game core";
  m.attr("__version__") = "0.1.0";

  auto error = py::register_exception<Error>(m, "DrGameError", PyExc_ValueError);
  (void)error;

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<>())
      .def_static("with_slots", &TimeGrid::with_slots)
      .def_readonly("slots_per_day", &TimeGrid::slots_per_day)
      .def_readonly("slot_hours", &TimeGrid::slot_hours)
      .def("to_slot", &TimeGrid::to_slot)
      .def("to_hours", &TimeGrid::to_hours);

  py::class_<Task>(m, "Task")
      .def(py::init<>())
      .def(py::init([](std::string id, double power_kw, int duration_slots, int earliest, int latest,
                       int preferred_start, int preferred_finish) {
             return Task{std::move(id), power_kw, duration_slots, earliest, latest, preferred_start,
                         preferred_finish};
           }),
           py::arg("id"), py::arg("power_kw"), py::arg("duration_slots"), py::arg("earliest_start_slot"),
           py::arg("latest_finish_slot"), py::arg("preferred_start_slot"), py::arg("preferred_finish_slot"))
      .def_readwrite("id", &Task::id)
      .def_readwrite("power_kw", &Task::power_kw)
      .def_readwrite("duration_slots", &Task::duration_slots)
      .def_readwrite("earliest_start_slot", &Task::earliest_start_slot)
      .def_readwrite("latest_finish_slot", &Task::latest_finish_slot)
      .def_readwrite("preferred_start_slot", &Task::preferred_start_slot)
      .def_readwrite("preferred_finish_slot", &Task::preferred_finish_slot)
      .def("energy_demand_kwh", &Task::energy_demand_kwh, py::arg("grid") = TimeGrid{})
      .def("__repr__", [](const Task& t) {
        return "Task('" + t.id + "', " + std::to_string(t.power_kw) + " kW, " +
               std::to_string(t.duration_slots) + " slots)";
      });

  m.def("table1_catalog", [](const TimeGrid& g) {
        std::vector<Task> out;
        for (const auto& e : table1_catalog(g).entries) out.push_back(e.task);
        return out;
      }, py::arg("grid") = TimeGrid{}, "Bundled appliance tasks (preferred window = admitted window).");
  m.def("validate_task", [](const Task& t, const TimeGrid& g) -> py::object {
        auto v = validate_task(t, g);
        if (v.ok()) return py::none();
        return py::str(std::string(to_string(*v.error)) + ": " + v.message);
      }, py::arg("task"), py::arg("grid") = TimeGrid{}, "None when valid, otherwise the failure reason.");
  m.def("feasible_starts", &feasible_starts, py::arg("task"), py::arg("grid") = TimeGrid{});
  m.def("task_profile", [](const Task& t, int start, const TimeGrid& g) {
        return task_profile(t, start, g).energy_kwh;
      }, py::arg("task"), py::arg("start_slot"), py::arg("grid") = TimeGrid{});
  m.def("time_shift", &time_shift, py::arg("task"), py::arg("start_slot"), py::arg("grid") = TimeGrid{});
  m.def("discomfort_cost", [](const std::vector<int>& shifts, double alpha, double beta, double delta) {
        return discomfort_cost(shifts, DiscomfortCoefficients{alpha, beta, delta});
      }, py::arg("shifts"), py::arg("alpha") = 1.0, py::arg("beta") = 0.0, py::arg("delta") = 0.0);

  py::class_<CostCoefficients>(m, "CostCoefficients")
      .def(py::init([](std::vector<double> a, std::vector<double> b, std::vector<double> c) {
        CostCoefficients k{std::move(a), std::move(b), std::move(c)};
        k.validate();
        return k;
      }), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_readonly("a", &CostCoefficients::a)
      .def_readonly("b", &CostCoefficients::b)
      .def_readonly("c", &CostCoefficients::c);
  m.def("default_coefficients", [](const TimeGrid& g) { return make_coefficients(TariffSettings{}, g); },
        py::arg("grid") = TimeGrid{});
  m.def("realtime_price", [](const std::vector<double>& load, const CostCoefficients& k) {
        return realtime_price(LoadVector{load}, k).price;
      });
  m.def("utility_cost", [](const std::vector<double>& load, const CostCoefficients& k) {
        return utility_cost(LoadVector{load}, k);
      });
  m.def("solar_generation", &solar_generation, py::arg("grid") = TimeGrid{}, py::arg("peak_kw") = 2.0);

  py::class_<ObjectiveVector>(m, "ObjectiveVector")
      .def(py::init<double, double>(), py::arg("cost"), py::arg("discomfort"))
      .def_readonly("cost", &ObjectiveVector::cost)
      .def_readonly("discomfort", &ObjectiveVector::discomfort)
      .def("__iter__", [](const ObjectiveVector& v) { return py::iter(py::make_tuple(v.cost, v.discomfort)); })
      .def("__repr__", [](const ObjectiveVector& v) {
        return "ObjectiveVector(" + std::to_string(v.cost) + ", " + std::to_string(v.discomfort) + ")";
      });
  m.def("dominates", &dominates);

  py::class_<Player>(m, "Player")
      .def(py::init([](std::string id, std::vector<Task> tasks, std::vector<double> generation,
                       double revenue_rate, double alpha, double beta, double delta) {
             Player p;
             p.id = std::move(id);
             p.tasks = std::move(tasks);
             if (!generation.empty()) {
               p.kind = PlayerKind::prosumer;
               p.generation = GenerationProfile{std::move(generation), revenue_rate};
             }
             p.discomfort = {alpha, beta, delta};
             return p;
           }),
           py::arg("id"), py::arg("tasks"), py::arg("generation") = std::vector<double>{},
           py::arg("revenue_rate") = 0.0, py::arg("alpha") = 1.0, py::arg("beta") = 0.0,
           py::arg("delta") = 0.0)
      .def_readonly("id", &Player::id)
      .def_readonly("tasks", &Player::tasks)
      .def_property_readonly("is_prosumer", [](const Player& p) { return p.kind == PlayerKind::prosumer; });

  m.def("evaluate", [](const Player& p, const std::vector<int>& starts, const std::vector<double>& others,
                       const CostCoefficients& k, const TimeGrid& g) {
        return ScheduleEvaluator(p, LoadVector{others}, k, g).checked(starts);
      }, py::arg("player"), py::arg("starts"), py::arg("others_load"), py::arg("coeffs"),
      py::arg("grid") = TimeGrid{});

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("population_size", &SolverConfig::population_size)
      .def_readwrite("generations", &SolverConfig::generations)
      .def_readwrite("crossover_rate", &SolverConfig::crossover_rate)
      .def_readwrite("mutation_rate", &SolverConfig::mutation_rate)
      .def_readwrite("tournament_size", &SolverConfig::tournament_size)
      .def_readwrite("rng_seed", &SolverConfig::rng_seed)
      .def_property("weights",
                    [](const SolverConfig& c) { return py::make_tuple(c.selection_weights.cost,
                                                                      c.selection_weights.discomfort); },
                    [](SolverConfig& c, std::pair<double, double> w) { c.selection_weights = {w.first, w.second}; });

  m.def("non_dominated_sort", [](const std::vector<ObjectiveVector>& pts) { return non_dominated_sort(pts); });
  m.def("crowding_distance", [](const std::vector<ObjectiveVector>& pts) { return crowding_distance(pts); });
  m.def("evolve", [](const Player& p, const std::vector<double>& others, const CostCoefficients& k,
                     const SolverConfig& cfg, const TimeGrid& g) {
        const auto front = evolve(p, LoadVector{others}, k, g, cfg);
        py::list out;
        for (const auto& c : front.members) out.append(py::make_tuple(c.genes, *c.objectives));
        return out;
      }, py::arg("player"), py::arg("others_load"), py::arg("coeffs"), py::arg("config") = SolverConfig{},
      py::arg("grid") = TimeGrid{}, "Pareto front as a list of (starts, ObjectiveVector).");

  m.def("run_game", [](std::vector<Player> players, const CostCoefficients& k, const SolverConfig& solver,
                       int max_rounds, const TimeGrid& g) {
        GameState state = make_game_state(std::move(players), k, g);
        GameConfig cfg;
        cfg.solver = solver;
        cfg.max_rounds = max_rounds;
        const auto report = run_to_equilibrium(state, cfg);
        py::dict d;
        py::list strategies;
        for (const auto& s : state.strategies) strategies.append(s.genes);
        d["strategies"] = strategies;
        d["objectives"] = report.objectives;
        d["rounds_used"] = report.rounds_used;
        d["converged"] = report.converged;
        d["max_deviation_gain"] = report.max_deviation_gain;
        d["price"] = state.price.price;
        return d;
      }, py::arg("players"), py::arg("coeffs"), py::arg("solver") = SolverConfig{}, py::arg("max_rounds") = 20,
      py::arg("grid") = TimeGrid{}, "Best-response dynamics to equilibrium.");

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def_static("defaults", &ExperimentConfig::defaults)
      .def_static("load", &load_experiment_config)
      .def_property("players", [](const ExperimentConfig& c) { return c.population.players; },
                    [](ExperimentConfig& c, int v) { c.population.players = v; })
      .def_property("prosumer_fraction", [](const ExperimentConfig& c) { return c.population.prosumer_fraction; },
                    [](ExperimentConfig& c, double v) { c.population.prosumer_fraction = v; })
      .def_property("tasks_min", [](const ExperimentConfig& c) { return c.population.tasks_min; },
                    [](ExperimentConfig& c, int v) { c.population.tasks_min = v; })
      .def_property("solver", [](const ExperimentConfig& c) { return c.game.solver; },
                    [](ExperimentConfig& c, const SolverConfig& s) { c.game.solver = s; })
      .def_property("verify_samples", [](const ExperimentConfig& c) { return c.game.verify_samples; },
                    [](ExperimentConfig& c, int v) { c.game.verify_samples = v; });

  m.def("run_scenario", [](const std::string& scenario, const ExperimentConfig& cfg, std::uint64_t seed) {
        ScenarioSpec spec;
        switch (parse_scenario(scenario)) {
          case ScenarioKind::reference: spec = ScenarioSpec::reference(); break;
          case ScenarioKind::cost: spec = ScenarioSpec::cost(); break;
          case ScenarioKind::cost_discomfort: spec = ScenarioSpec::cost_discomfort(cfg.tradeoff_weights); break;
        }
        ScenarioResult r;
        {
          py::gil_scoped_release release;
          r = run_scenario(spec, cfg, seed);
        }
        return summary_dict(r);
      }, py::arg("scenario"), py::arg("config"), py::arg("seed") = 1,
      "Runs one scenario ('ref', 'cost', 'cost-discomfort') and returns its summary.");

  m.def("compare", [](const std::vector<py::dict>& summaries) {
        std::vector<ComparisonRow> rows;
        for (const auto& s : summaries) {
          rows.push_back({s["scenario"].cast<std::string>(), s["seed"].cast<std::uint64_t>(),
                          s["total_cost"].cast<double>(), s["total_discomfort"].cast<double>(), 0.0, 0.0});
        }
        py::list out;
        for (const auto& r : compare_rows(std::move(rows)).rows) {
          py::dict d;
          d["scenario"] = r.scenario;
          d["seed"] = r.seed;
          d["total_cost"] = r.total_cost;
          d["total_discomfort"] = r.total_discomfort;
          d["pct_cost_vs_ref"] = r.pct_cost_vs_ref;
          d["discomfort_norm"] = r.discomfort_norm;
          out.append(d);
        }
        return out;
      }, "Adds pct_cost_vs_ref and discomfort_norm to run_scenario summaries.");
}
