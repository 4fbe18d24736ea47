#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drgame/catalog.hpp"
#include "drgame/game.hpp"

namespace drgame {

enum class ScenarioKind { reference, cost, cost_discomfort };

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::reference;
  Weights weights{1.0, 0.0};
  bool optimize = false;

  static ScenarioSpec reference();
  static ScenarioSpec cost();
  static ScenarioSpec cost_discomfort(Weights weights = {0.5, 0.5});

  [[nodiscard]] std::string name() const;
};

/// "Ref-sce", "Cost-sce", "Cost-discomfort-sce".
std::string scenario_name(ScenarioKind kind);
/// Accepts the display names and the CLI keys ref | cost | cost-discomfort.
ScenarioKind parse_scenario(const std::string& text);
std::string scenario_key(ScenarioKind kind);

struct PopulationSettings {
  int players = 30;
  double prosumer_fraction = 0.3;
  int tasks_min = 8;
  double solar_peak_kw = 2.0;
  std::optional<double> revenue_rate;  // defaults to the mean base rate
};

/// Everything a scenario run needs besides the seed.
struct ExperimentConfig {
  TimeGrid grid;
  TariffSettings tariff;
  DiscomfortCoefficients discomfort;
  PopulationSettings population;
  GameConfig game;
  Weights tradeoff_weights{0.5, 0.5};  // used by Cost-discomfort-sce
  Catalog catalog;

  /// Defaults with the bundled appliance catalog.
  static ExperimentConfig defaults();
  [[nodiscard]] CostCoefficients coefficients() const;
  [[nodiscard]] double revenue_rate() const;
};

/// Extra inputs for population generation that do not change between players.
struct PopulationContext {
  TimeGrid grid;
  double solar_peak_kw = 2.0;
  double revenue_rate = 0.0;
  DiscomfortCoefficients discomfort;
};

/// Seeded players, each with at least `tasks_min` catalog tasks. Catalog rows
/// without a preferred window get one drawn per player. round(n * fraction)
/// players become prosumers with solar generation scaled by U[0.8, 1.2].
/// Throws EmptyCatalog.
std::vector<Player> generate_population(int n_players, double prosumer_fraction, int tasks_min,
                                        const Catalog& catalog, std::uint64_t seed,
                                        const PopulationContext& context);

struct PlayerOutcome {
  std::string id;
  PlayerKind kind = PlayerKind::consumer;
  double energy_cost = 0.0;  // gross consumption at the final price
  double revenue = 0.0;
  double discomfort = 0.0;
};

struct ScenarioResult {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<PlayerOutcome> players;
  double total_cost = 0.0;  // sum of gross energy costs
  double total_discomfort = 0.0;
  double total_revenue = 0.0;
  LoadVector load;
  PriceSignal price;
  std::vector<double> utility_cost;  // diagnostic only, never billed
  EnergyBalance balance;
  int rounds_used = 0;
  bool converged = true;
  double max_deviation_gain = 0.0;
  GameState state;
};

/// Ref-sce evaluates everyone at their preferred starts (throws
/// PreferredWindowInfeasible if a preferred window cannot hold its task);
/// optimized scenarios run best-response dynamics with the scenario's weights.
ScenarioResult run_scenario(const ScenarioSpec& spec, const ExperimentConfig& config,
                            std::uint64_t seed);

struct ComparisonRow {
  std::string scenario;
  std::uint64_t seed = 0;
  double total_cost = 0.0;
  double total_discomfort = 0.0;
  double pct_cost_vs_ref = 0.0;  // signed: negative means cheaper than Ref-sce
  double discomfort_norm = 0.0;  // percent of Cost-sce discomfort, NaN without Cost-sce
};

struct ScenarioMedians {
  std::string scenario;
  double total_cost = 0.0;
  double total_discomfort = 0.0;
  double pct_cost_vs_ref = 0.0;
  double discomfort_norm = 0.0;
};

struct LoadCurve {
  std::string scenario;
  std::vector<double> energy_kwh;  // mean over seeds
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<ScenarioMedians> medians;
  std::vector<LoadCurve> load_curves;
};

/// Deltas against the Ref-sce result of the same seed. Throws MissingReference.
ComparisonTable compare(const std::vector<ScenarioResult>& results);
/// Same, from already tabulated rows (e.g. a summary.csv read back).
ComparisonTable compare_rows(std::vector<ComparisonRow> rows);

double median(std::vector<double> values);

}  // namespace drgame
