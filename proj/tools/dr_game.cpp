// dr-game: run demand-response scenarios, compare their summaries and
// validate task catalogs.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drgame/catalog.hpp"
#include "drgame/config.hpp"
#include "drgame/io.hpp"
#include "drgame/scenarios.hpp"

namespace fs = std::filesystem;
using namespace drgame;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;

struct RunArgs {
  std::string scenario = "all";
  int players = 30;
  int tasks_min = 8;
  double prosumer_frac = 0.3;
  std::string catalog;
  std::string config;
  std::uint64_t seed = 1;
  int seeds = 5;
  std::string out;
  bool strict = false;
  bool dump_fronts = false;
};

void print_medians(const ComparisonTable& table) {
  std::cout << std::left << std::setw(22) << "scenario" << std::right << std::setw(14) << "cost"
            << std::setw(14) << "discomfort" << std::setw(14) << "cost vs ref %" << std::setw(16)
            << "disc % of cost" << '\n';
  for (const auto& m : table.medians) {
    std::cout << std::left << std::setw(22) << m.scenario << std::right << std::fixed
              << std::setprecision(4) << std::setw(14) << m.total_cost << std::setw(14)
              << m.total_discomfort << std::setprecision(2) << std::setw(14) << m.pct_cost_vs_ref
              << std::setw(16) << m.discomfort_norm << '\n';
  }
  std::cout.unsetf(std::ios::floatfield);
}

int run(const RunArgs& args) {
  auto config = args.config.empty() ? ExperimentConfig::defaults() : load_experiment_config(args.config);
  config.population.players = args.players;
  config.population.tasks_min = args.tasks_min;
  config.population.prosumer_fraction = args.prosumer_frac;
  if (!args.catalog.empty()) {
    config.catalog = load_catalog(args.catalog, config.grid);
    if (auto bad = validate_catalog(config.catalog, config.grid); !bad.empty()) {
      for (const auto& v : bad) std::cerr << "invalid: " << v.message << '\n';
      return kExitValidation;
    }
  }

  std::vector<ScenarioSpec> specs{ScenarioSpec::reference()};
  if (args.scenario == "all") {
    specs.push_back(ScenarioSpec::cost());
    specs.push_back(ScenarioSpec::cost_discomfort(config.tradeoff_weights));
  } else if (auto kind = parse_scenario(args.scenario); kind == ScenarioKind::cost) {
    specs.push_back(ScenarioSpec::cost());
  } else if (kind == ScenarioKind::cost_discomfort) {
    specs.push_back(ScenarioSpec::cost_discomfort(config.tradeoff_weights));
  }

  const fs::path out_dir(args.out);
  fs::create_directories(out_dir);
  std::vector<ScenarioResult> results;
  bool all_converged = true;
  for (const auto& spec : specs) {
    for (int k = 0; k < args.seeds; ++k) {
      const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(k);
      const auto start = std::chrono::steady_clock::now();
      auto r = run_scenario(spec, config, seed);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::cerr << spec.name() << " seed " << seed << ": rounds " << r.rounds_used
                << (r.converged ? " (converged)" : " (NOT converged)") << ", max deviation gain "
                << r.max_deviation_gain << ", " << took.count() << " s\n";
      all_converged = all_converged && r.converged;

      const fs::path run_dir = out_dir / scenario_key(spec.kind) / ("seed_" + std::to_string(seed));
      write_price_csv(run_dir / "price_signal.csv", r.price, config.grid);
      write_equilibrium_report_csv(run_dir / "equilibrium_report.csv", r);
      write_balance_csv(run_dir / "balance.csv", r.balance);
      if (args.dump_fronts) {
        for (std::size_t i = 0; i < r.state.players.size(); ++i) {
          if (r.state.fronts[i].members.empty()) continue;
          write_front_csv(run_dir / ("front_" + r.state.players[i].id + ".csv"), r.state.fronts[i]);
        }
      }
      r.state = GameState{};
      results.push_back(std::move(r));
    }
  }

  const auto table = compare(results);
  write_summary_csv(out_dir / "summary.csv", table.rows);
  write_comparison_csv(out_dir / "comparison.csv", table.medians);
  write_loads_long_csv(out_dir / "loads_long.csv", results, config.grid);
  for (const auto& curve : table.load_curves) {
    write_load_csv(out_dir / ("load_" + scenario_key(parse_scenario(curve.scenario)) + ".csv"),
                   curve.energy_kwh, config.grid);
  }
  print_medians(table);

  if (args.strict && !all_converged) {
    std::cerr << "error: best-response dynamics did not converge\n";
    return kExitNonConvergence;
  }
  return 0;
}

int compare_dir(const std::string& in) {
  const auto table = compare_rows(read_summary_csv(fs::path(in) / "summary.csv"));
  print_medians(table);
  return 0;
}

int validate(const std::string& catalog_path, int slots) {
  const auto grid = TimeGrid::with_slots(slots);
  Catalog catalog;
  try {
    catalog = load_catalog(catalog_path, grid);
  } catch (const Error& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitValidation;
  }
  const auto bad = validate_catalog(catalog, grid);
  for (const auto& v : bad) std::cerr << "invalid: " << v.message << '\n';
  if (!bad.empty()) return kExitValidation;
  std::cout << catalog.size() << " tasks OK\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Residential demand-response game: NSGA-II best responses to a Nash equilibrium"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run scenarios and write CSV outputs");
  run_cmd->add_option("--scenario", run_args.scenario, "ref | cost | cost-discomfort | all")
      ->check(CLI::IsMember({"ref", "cost", "cost-discomfort", "all"}));
  run_cmd->add_option("--players", run_args.players)->check(CLI::PositiveNumber);
  run_cmd->add_option("--tasks-min", run_args.tasks_min)->check(CLI::PositiveNumber);
  run_cmd->add_option("--prosumer-frac", run_args.prosumer_frac)->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--catalog", run_args.catalog, "Task catalog (default: built-in table)")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--config", run_args.config, "Keyed text config")->check(CLI::ExistingFile);
  run_cmd->add_option("--seed", run_args.seed, "First seed");
  run_cmd->add_option("--seeds", run_args.seeds, "Number of consecutive seeds")->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", run_args.out, "Output directory")->required();
  run_cmd->add_flag("--strict", run_args.strict, "Exit 3 if any game fails to converge");
  run_cmd->add_flag("--dump-fronts", run_args.dump_fronts, "Write front_<player>.csv per run");

  std::string compare_in;
  auto* compare_cmd = app.add_subcommand("compare", "Summarize a previous run directory");
  compare_cmd->add_option("--in", compare_in)->required()->check(CLI::ExistingDirectory);

  std::string catalog_path;
  int slots = 48;
  auto* validate_cmd = app.add_subcommand("validate", "Check a task catalog");
  validate_cmd->add_option("--catalog", catalog_path)->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--slots", slots, "Slots per day")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(run_args);
    if (*compare_cmd) return compare_dir(compare_in);
    if (*validate_cmd) return validate(catalog_path, slots);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool validation = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidConfig ||
                            e.code() == ErrorCode::PreferredWindowInfeasible;
    return validation ? kExitValidation : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
