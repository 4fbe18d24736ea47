// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "drgame/io.hpp"
#include "support.hpp"

using namespace drgame;
using namespace drgame::testing;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// 1. Ref-sce discomfort is exactly zero on every configuration tried.
void ref_zero_discomfort(const std::vector<ScenarioResult>& default_runs) {
  bool ok = true;
  int configs = 0;
  for (const auto& r : default_runs) {
    if (r.scenario == "Ref-sce") ok = ok && r.total_discomfort == 0.0;
  }
  ++configs;
  auto variant = ExperimentConfig::defaults();
  variant.discomfort = {2.0, 1.0, 0.0};
  variant.population.players = 50;
  variant.population.tasks_min = 12;
  variant.tariff.a_coeff = 0.05;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ok = ok && run_scenario(ScenarioSpec::reference(), variant, seed).total_discomfort == 0.0;
  }
  ++configs;
  report(1, ok, "Ref-sce total discomfort == 0 on " + std::to_string(configs) + " configs x 5 seeds");
}

// 2 and 3. Calibration bands on the default configuration, medians over 5 seeds.
void calibration(const ComparisonTable& table, double runtime_s) {
  double cost_pct = NAN, cd_pct = NAN, cost_disc = NAN, cd_disc = NAN;
  for (const auto& m : table.medians) {
    if (m.scenario == "Cost-sce") {
      cost_pct = m.pct_cost_vs_ref;
      cost_disc = m.total_discomfort;
    }
    if (m.scenario == "Cost-discomfort-sce") {
      cd_pct = m.pct_cost_vs_ref;
      cd_disc = m.total_discomfort;
    }
  }
  const double cost_red = -cost_pct;
  const double cd_red = -cd_pct;
  const bool band = cost_red >= 25.0 && cost_red <= 55.0;
  const bool within = std::abs(cd_red - cost_red) <= 8.0;
  const bool not_better = cd_red <= cost_red;
  const bool fast = runtime_s <= 600.0;
  report(2, band && within && not_better && fast,
         fmt("Cost-sce reduction %.2f%% (band 25-55), Cost-discomfort-sce %.2f%% (gap %.2f pp, <= 8, not better), ",
             cost_red, cd_red, cost_red - cd_red) +
             fmt("runtime %.1f s (<= 600)", runtime_s));
  report(3, cd_disc <= 0.95 * cost_disc,
         fmt("median discomfort Cost-discomfort-sce %.1f vs 0.95 x Cost-sce %.1f", cd_disc, 0.95 * cost_disc));
}

// 4. NSGA-II front equals the enumerated Pareto set on small instances.
void nsga_oracle() {
  const TimeGrid g;
  const auto k = make_coefficients(TariffSettings{}, g);
  std::mt19937_64 rng(4004);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  int matched = 0;
  int instances = 0;
  double solve_s = 0.0;
  while (instances < 20) {
    Player p = consumer("p", {});
    const int tasks = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < tasks; ++j) p.tasks.push_back(random_task(rng, 8));
    const auto schedules = enumerate_schedules(p.tasks, g);
    if (schedules.size() > 200) continue;
    ++instances;
    std::vector<double> others(48);
    for (double& o : others) o = u(rng);

    SolverConfig cfg;
    cfg.generations = 50;
    cfg.rng_seed = rng();
    const auto t0 = Clock::now();
    const auto front = evolve(p, LoadVector{others}, k, g, cfg);
    solve_s += seconds_since(t0);

    auto snap = [](double x) { return std::round(x * 1e9) / 1e9; };
    std::vector<ObjectiveVector> all;
    for (const auto& s : schedules) {
      auto o = direct_objectives(p, s, others, k, g);
      all.push_back({snap(o.cost), o.discomfort});
    }
    std::set<std::pair<double, double>> truth, got;
    for (auto i : pareto_indices(all)) truth.emplace(all[i].cost, all[i].discomfort);
    for (const auto& m : front.members) got.emplace(snap(m.objectives->cost), m.objectives->discomfort);
    if (got == truth) ++matched;
  }
  report(4, matched == instances && solve_s < 5.0,
         fmt("%.0f/%.0f fronts equal the enumerated Pareto set, solver time %.2f s (< 5)", matched, instances,
             solve_s));
}

// 5. Anti-coordination game reaches the enumerated pure equilibrium.
void anti_coordination() {
  const TimeGrid g;
  const auto k = make_coefficients(TariffSettings{}, g);
  const auto players = anti_coordination_players();

  // Payoff table over the four profiles; keep those where neither player can
  // lower its cost by switching.
  auto cost = [&](int own, int other) {
    std::vector<double> others(48, 0.0);
    others[static_cast<std::size_t>(other)] = 1.0;
    return direct_objectives(players[0], {own}, others, k, g).cost;
  };
  std::set<std::vector<int>> nash;
  for (int s0 : {40, 41}) {
    for (int s1 : {40, 41}) {
      const bool stable0 = cost(s0, s1) <= cost(81 - s0, s1);
      const bool stable1 = cost(s1, s0) <= cost(81 - s1, s0);
      if (stable0 && stable1) nash.insert({s0, s1});
    }
  }

  bool ok = !nash.empty();
  std::string detail;
  for (const auto& order : std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}) {
    GameState state = make_game_state(players, k, g);
    GameConfig cfg;
    cfg.solver.population_size = 20;
    cfg.solver.generations = 20;
    cfg.solver.selection_weights = {1.0, 0.0};
    cfg.order = order;
    const auto r = run_to_equilibrium(state, cfg);
    const std::vector<int> profile{state.strategies[0].genes[0], state.strategies[1].genes[0]};
    ok = ok && r.converged && r.rounds_used <= 2 && nash.count(profile) == 1;
    detail += fmt("order %.0f%.0f: rounds %.0f profile ", order[0], order[1], r.rounds_used) +
              std::to_string(profile[0]) + "/" + std::to_string(profile[1]) + "; ";
  }
  report(5, ok, detail + std::to_string(nash.size()) + " pure equilibria enumerated");
}

// 6. Sampled deviations find no gain above 1e-6 on every converged default run.
void epsilon_nash(const std::vector<ScenarioResult>& runs) {
  double worst = 0.0;
  bool all_converged = true;
  int count = 0;
  for (const auto& r : runs) {
    if (r.scenario == "Ref-sce") continue;
    ++count;
    worst = std::max(worst, r.max_deviation_gain);
    all_converged = all_converged && r.converged;
  }
  report(6, all_converged && worst <= 1e-6,
         fmt("%.0f optimized runs, ", count) + (all_converged ? "all converged" : "NOT all converged") +
             fmt(", max deviation gain %.3g (<= 1e-6)", worst));
}

// 7. Identical CLI invocations give byte-identical summary.csv.
void determinism() {
  const auto dir = fs::temp_directory_path() / "drgame_acceptance_determinism";
  fs::remove_all(dir);
  const std::string base = std::string(DRGAME_CLI_PATH) + " run --scenario all --seed 7 --seeds 1 --out ";
  bool ok = true;
  for (const char* run : {"a", "b"}) {
    const auto cmd = base + (dir / run).string() + " >/dev/null 2>&1";
    ok = ok && std::system(cmd.c_str()) == 0;
  }
  const auto a = slurp(dir / "a" / "summary.csv");
  const auto b = slurp(dir / "b" / "summary.csv");
  report(7, ok && !a.empty() && a == b,
         "two default runs with seed 7: summary.csv " + std::string(a == b ? "identical" : "differs") + " (" +
             std::to_string(a.size()) + " bytes)");
}

// 8. Formula examples, evaluated directly.
void formulas() {
  const TimeGrid g;
  std::vector<std::string> failed;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) failed.emplace_back(what);
  };
  const auto table = table1_catalog(g);
  auto task = [&](const char* id) {
    for (const auto& e : table.entries) {
      if (e.task.id == id) return e.task;
    }
    return Task{};
  };

  // Aggregate load against the double sum.
  {
    std::mt19937_64 rng(8);
    std::vector<std::vector<Task>> tasks(30);
    std::vector<std::vector<int>> starts(30);
    std::vector<ConsumptionProfile> profiles;
    for (int i = 0; i < 30; ++i) {
      for (int j = 0; j < 8; ++j) {
        tasks[i].push_back(random_task(rng));
        const auto fs = brute_force_starts(tasks[i].back(), g);
        starts[i].push_back(fs[rng() % fs.size()]);
      }
      profiles.push_back(player_profile(Schedule{starts[i]}, tasks[i], g));
    }
    const auto load = aggregate_load(profiles);
    const auto oracle = double_sum_load(tasks, starts, g);
    bool same = true;
    for (std::size_t t = 0; t < 48; ++t) same = same && near(load.energy_kwh[t], oracle[t]);
    expect(same, "aggregate load");
  }
  // Utility cost and price.
  expect(utility_cost(LoadVector{{2.0}}, CostCoefficients{{1.0}, {0.0}, {0.0}})[0] == 4.0, "utility cost a=1,l=2");
  expect(near(realtime_price(LoadVector{std::vector<double>(48, 20.0)}, flat_coefficients(0.01, 0.10)).price[0], 0.30),
         "price 0.01*20+0.10");
  // Consumer cost: fridge under the stepped tariff.
  {
    const auto k = make_coefficients(TariffSettings{}, g);
    expect(near(consumer_energy_cost(PriceSignal{k.b}, task_profile(task("Fridge"), 0, g)), 0.876), "fridge cost");
  }
  // Prosumer revenue.
  expect(near(prosumer_revenue(GenerationProfile{std::vector<double>(48, 1.0), 0.1}), 4.8), "revenue 4.8");
  // Time shift: inside, early, late and both-sided overhang.
  {
    const Task t = make_task("x", 1.0, 12, 40, 4, 20, 28);
    expect(time_shift(t, 20, g) == 0 && time_shift(t, 24, g) == 0, "shift inside");
    expect(time_shift(t, 16, g) == 4, "shift early");
    expect(time_shift(t, 26, g) == 2, "shift late");
    const Task wide = make_task("y", 1.0, 12, 40, 8, 20, 22);
    expect(time_shift(wide, 18, g) == 4, "shift both sides");
  }
  // Discomfort.
  expect(discomfort_cost(std::vector<int>{1, 2}, DiscomfortCoefficients{1.0, 2.0, 0.5}) == 12.0, "discomfort 12");
  // Feasible starts.
  expect(feasible_starts(task("Cooker Hob"), g) == std::vector<int>{16, 17}, "hob starts");
  expect(feasible_starts(task("Fridge"), g) == std::vector<int>{0}, "fridge start");
  // Energy balance.
  {
    Player p = consumer("p", {make_task("iron", 1.2, 24, 26, 2, 24, 26)});
    p.kind = PlayerKind::prosumer;
    p.generation = GenerationProfile{std::vector<double>(48, 0.0), 0.1};
    p.generation.energy_kwh[24] = 0.6;
    p.generation.energy_kwh[30] = 1.0;
    const auto b = energy_balance(make_game_state({p}, make_coefficients(TariffSettings{}, g), g));
    expect(b.utility[24] == 0 && b.surplus[24] == 0 && b.utility[25] == 600'000 && b.surplus[30] == 1'000'000,
           "energy balance");
  }

  std::string detail = failed.empty() ? "all formula examples match" : "mismatch:";
  for (const auto& f : failed) detail += " [" + f + "]";
  report(8, failed.empty(), detail);
}

// 9. Property suites, 1000 cases each, from the unit-test binary.
void properties() {
  const std::string cmd = std::string(DRGAME_TESTS_PATH) + " --test-suite=properties >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  report(9, status == 0, "property suites (6 x 1000 cases) " + std::string(status == 0 ? "passed" : "failed"));
}

}  // namespace

int main() {
  // Full default pipeline: 3 scenarios x 5 seeds, shared by criteria 1, 2, 3 and 6.
  const auto config = ExperimentConfig::defaults();
  std::vector<ScenarioResult> runs;
  const auto t0 = Clock::now();
  for (const auto& spec : {ScenarioSpec::reference(), ScenarioSpec::cost(),
                           ScenarioSpec::cost_discomfort(config.tradeoff_weights)}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto r = run_scenario(spec, config, seed);
      r.state = GameState{};
      runs.push_back(std::move(r));
    }
  }
  const double runtime = seconds_since(t0);
  const auto table = compare(runs);

  ref_zero_discomfort(runs);
  calibration(table, runtime);
  nsga_oracle();
  anti_coordination();
  epsilon_nash(runs);
  determinism();
  formulas();
  properties();

  std::printf("%d criteria failed\n", failures);
  return failures;
}
