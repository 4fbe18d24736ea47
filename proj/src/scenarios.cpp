#include "drgame/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace drgame {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double percent_of(double value, double base) {
  if (base == 0.0) return value == 0.0 ? 0.0 : kNaN;
  return 100.0 * value / base;
}

}  // namespace

ScenarioSpec ScenarioSpec::reference() { return {ScenarioKind::reference, {1.0, 0.0}, false}; }
ScenarioSpec ScenarioSpec::cost() { return {ScenarioKind::cost, {1.0, 0.0}, true}; }
ScenarioSpec ScenarioSpec::cost_discomfort(Weights weights) {
  return {ScenarioKind::cost_discomfort, weights, true};
}

std::string ScenarioSpec::name() const { return scenario_name(kind); }

std::string scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::reference: return "Ref-sce";
    case ScenarioKind::cost: return "Cost-sce";
    case ScenarioKind::cost_discomfort: return "Cost-discomfort-sce";
  }
  return "unknown";
}

std::string scenario_key(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::reference: return "ref";
    case ScenarioKind::cost: return "cost";
    case ScenarioKind::cost_discomfort: return "cost-discomfort";
  }
  return "unknown";
}

ScenarioKind parse_scenario(const std::string& text) {
  for (auto k : {ScenarioKind::reference, ScenarioKind::cost, ScenarioKind::cost_discomfort}) {
    if (text == scenario_key(k) || text == scenario_name(k)) return k;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown scenario '" + text + "'");
}

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig c;
  c.catalog = table1_catalog(c.grid);
  return c;
}

CostCoefficients ExperimentConfig::coefficients() const { return make_coefficients(tariff, grid); }

double ExperimentConfig::revenue_rate() const {
  if (population.revenue_rate) return *population.revenue_rate;
  const auto k = coefficients();
  return std::accumulate(k.b.begin(), k.b.end(), 0.0) / static_cast<double>(k.b.size());
}

std::vector<Player> generate_population(int n_players, double prosumer_fraction, int tasks_min,
                                        const Catalog& catalog, std::uint64_t seed,
                                        const PopulationContext& context) {
  if (catalog.empty()) throw Error(ErrorCode::EmptyCatalog, "no tasks to sample from");
  if (n_players < 1) throw Error(ErrorCode::InvalidConfig, "need at least one player");
  if (!(prosumer_fraction >= 0.0 && prosumer_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "prosumer fraction must lie in [0, 1]");
  }
  if (tasks_min < 1) throw Error(ErrorCode::InvalidConfig, "tasks_min must be positive");

  std::mt19937_64 rng(seed);
  const auto& grid = context.grid;
  const int catalog_size = static_cast<int>(catalog.size());

  std::vector<std::size_t> prosumers(static_cast<std::size_t>(n_players));
  std::iota(prosumers.begin(), prosumers.end(), 0);
  std::shuffle(prosumers.begin(), prosumers.end(), rng);
  prosumers.resize(static_cast<std::size_t>(std::lround(n_players * prosumer_fraction)));
  std::sort(prosumers.begin(), prosumers.end());

  const auto solar = solar_generation(grid, context.solar_peak_kw);
  std::vector<Player> players;
  players.reserve(static_cast<std::size_t>(n_players));
  for (int i = 0; i < n_players; ++i) {
    Player p;
    char id[32];
    std::snprintf(id, sizeof id, "player_%02d", i);
    p.id = id;
    p.discomfort = context.discomfort;

    std::vector<std::size_t> picks(catalog.size());
    std::iota(picks.begin(), picks.end(), 0);
    std::shuffle(picks.begin(), picks.end(), rng);
    if (tasks_min <= catalog_size) {
      std::uniform_int_distribution<int> count(tasks_min, catalog_size);
      picks.resize(static_cast<std::size_t>(count(rng)));
    } else {
      std::uniform_int_distribution<std::size_t> extra(0, catalog.size() - 1);
      while (static_cast<int>(picks.size()) < tasks_min) picks.push_back(extra(rng));
    }
    std::sort(picks.begin(), picks.end());

    std::map<std::string, int> seen;
    for (auto k : picks) {
      const auto& entry = catalog.entries[k];
      Task t = entry.has_preferred ? entry.task : with_random_preferred_window(entry.task, grid, rng);
      if (int n = seen[t.id]++; n > 0) t.id += "#" + std::to_string(n + 1);
      p.tasks.push_back(std::move(t));
    }

    if (std::binary_search(prosumers.begin(), prosumers.end(), static_cast<std::size_t>(i))) {
      p.kind = PlayerKind::prosumer;
      std::uniform_real_distribution<double> scale(0.8, 1.2);
      const double s = scale(rng);
      p.generation.energy_kwh = solar;
      for (auto& e : p.generation.energy_kwh) e *= s;
      p.generation.revenue_rate = context.revenue_rate;
    }
    players.push_back(std::move(p));
  }
  return players;
}

ScenarioResult run_scenario(const ScenarioSpec& spec, const ExperimentConfig& config,
                            std::uint64_t seed) {
  const auto& pop = config.population;
  PopulationContext ctx{config.grid, pop.solar_peak_kw, config.revenue_rate(), config.discomfort};
  auto players =
      generate_population(pop.players, pop.prosumer_fraction, pop.tasks_min, config.catalog, seed, ctx);

  if (!spec.optimize) {
    for (const auto& p : players) {
      for (const auto& t : p.tasks) {
        auto v = validate_task(t, config.grid);
        if (v.error == ErrorCode::PreferredOutsideAdmitted || v.error == ErrorCode::PreferredTooShort) {
          throw Error(ErrorCode::PreferredWindowInfeasible, v.message);
        }
      }
    }
  }

  ScenarioResult r;
  r.scenario = spec.name();
  r.seed = seed;
  r.state = make_game_state(std::move(players), config.coefficients(), config.grid);

  if (spec.optimize) {
    GameConfig game = config.game;
    game.solver.selection_weights = spec.weights;
    game.solver.rng_seed = derive_seed(seed, config.game.solver.rng_seed);
    const auto report = run_to_equilibrium(r.state, game);
    r.rounds_used = report.rounds_used;
    r.converged = report.converged;
    r.max_deviation_gain = report.max_deviation_gain;
    r.balance = report.balance;
  } else {
    r.balance = energy_balance(r.state);
  }

  const auto& state = r.state;
  r.load = total_load(state);
  r.price = state.price;
  r.utility_cost = utility_cost(r.load, state.coeffs);
  for (std::size_t i = 0; i < state.players.size(); ++i) {
    const auto& p = state.players[i];
    PlayerOutcome o;
    o.id = p.id;
    o.kind = p.kind;
    o.energy_cost = consumer_energy_cost(state.price, strategy_profile(state, i));
    o.revenue = p.kind == PlayerKind::prosumer ? prosumer_revenue(p.generation) : 0.0;
    o.discomfort = state.strategies[i].objectives->discomfort;
    r.total_cost += o.energy_cost;
    r.total_revenue += o.revenue;
    r.total_discomfort += o.discomfort;
    r.players.push_back(std::move(o));
  }
  return r;
}

double median(std::vector<double> values) {
  std::erase_if(values, [](double v) { return std::isnan(v); });
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ComparisonTable compare_rows(std::vector<ComparisonRow> rows) {
  const std::string ref = scenario_name(ScenarioKind::reference);
  const std::string cost = scenario_name(ScenarioKind::cost);
  std::map<std::uint64_t, const ComparisonRow*> ref_by_seed;
  std::map<std::uint64_t, const ComparisonRow*> cost_by_seed;
  for (const auto& r : rows) {
    if (r.scenario == ref) ref_by_seed.emplace(r.seed, &r);
    if (r.scenario == cost) cost_by_seed.emplace(r.seed, &r);
  }

  ComparisonTable table;
  for (auto row : rows) {
    auto it = ref_by_seed.find(row.seed);
    if (it == ref_by_seed.end()) {
      throw Error(ErrorCode::MissingReference, "no Ref-sce result for seed " + std::to_string(row.seed));
    }
    row.pct_cost_vs_ref = percent_of(row.total_cost - it->second->total_cost, it->second->total_cost);
    auto c = cost_by_seed.find(row.seed);
    row.discomfort_norm = c == cost_by_seed.end() ? kNaN
                                                  : percent_of(row.total_discomfort, c->second->total_discomfort);
    table.rows.push_back(std::move(row));
  }

  std::vector<std::string> order;
  for (const auto& r : table.rows) {
    if (std::find(order.begin(), order.end(), r.scenario) == order.end()) order.push_back(r.scenario);
  }
  for (const auto& name : order) {
    std::vector<double> cost_v, disc_v, pct_v, norm_v;
    for (const auto& r : table.rows) {
      if (r.scenario != name) continue;
      cost_v.push_back(r.total_cost);
      disc_v.push_back(r.total_discomfort);
      pct_v.push_back(r.pct_cost_vs_ref);
      norm_v.push_back(r.discomfort_norm);
    }
    table.medians.push_back({name, median(cost_v), median(disc_v), median(pct_v), median(norm_v)});
  }
  return table;
}

ComparisonTable compare(const std::vector<ScenarioResult>& results) {
  std::vector<ComparisonRow> rows;
  for (const auto& r : results) rows.push_back({r.scenario, r.seed, r.total_cost, r.total_discomfort, 0.0, 0.0});
  auto table = compare_rows(std::move(rows));

  for (const auto& m : table.medians) {
    LoadCurve curve{m.scenario, {}};
    int count = 0;
    for (const auto& r : results) {
      if (r.scenario != m.scenario) continue;
      if (curve.energy_kwh.empty()) curve.energy_kwh.assign(r.load.energy_kwh.size(), 0.0);
      for (std::size_t t = 0; t < curve.energy_kwh.size(); ++t) curve.energy_kwh[t] += r.load.energy_kwh[t];
      ++count;
    }
    for (auto& e : curve.energy_kwh) e /= count;
    table.load_curves.push_back(std::move(curve));
  }
  return table;
}

}  // namespace drgame
