#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "drgame/nsga2.hpp"

namespace drgame {

/// SplitMix64 finalizer over (base, a, b); used to give every solver run its
/// own reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Players, their current strategies and the price those strategies induce.
struct GameState {
  std::vector<Player> players;
  std::vector<Chromosome> strategies;
  // Per-player normalization fixed by the player's first best response.
  std::vector<std::optional<FrontScale>> scales;
  // Front from each player's most recent best response (empty before one).
  std::vector<ParetoFront> fronts;
  PriceSignal price;
  CostCoefficients coeffs;
  TimeGrid grid;
  int round = 0;
  bool converged = false;
};

/// Starts every player at its preferred starts. Throws InfeasiblePlayer.
GameState make_game_state(std::vector<Player> players, CostCoefficients coeffs, TimeGrid grid);

ConsumptionProfile strategy_profile(const GameState& state, std::size_t player);
LoadVector total_load(const GameState& state);
/// Sum of all other players' profiles, in player order.
LoadVector others_load(const GameState& state, std::size_t player);

/// Recomputes the price from the current strategies and re-evaluates every
/// strategy's objectives against it.
void refresh(GameState& state);

struct BestResponse {
  Chromosome strategy;
  FrontScale scale;
  double incumbent_score = 0.0;  // current strategy under `scale`
  double score = 0.0;            // chosen strategy under `scale`
  ParetoFront front;
};

/// NSGA-II against the frozen load of the other players, with the current
/// strategy injected into the initial population. Uses the player's stored
/// scale when present, otherwise the new front's. Does not modify `state`.
BestResponse best_response(const GameState& state, std::size_t player, const SolverConfig& cfg);

/// Per-slot energy accounts in integer units of 1e-6 kWh so that
/// utility + generation - demand - surplus is exactly zero.
struct EnergyBalance {
  static constexpr double kwh_per_unit = 1e-6;

  std::vector<std::int64_t> demand;
  std::vector<std::int64_t> generation;
  std::vector<std::int64_t> utility;
  std::vector<std::int64_t> surplus;

  static std::int64_t to_units(double kwh);
  static double to_kwh(std::int64_t units) { return static_cast<double>(units) * kwh_per_unit; }
};

EnergyBalance energy_balance(const GameState& state);

struct DeviationCheck {
  double max_gain = 0.0;
  std::size_t worst_player = 0;
  bool epsilon_nash = true;
};

/// Samples unilateral deviations per player (random feasible schedules plus
/// the all-preferred and all-earliest ones) against the frozen others and
/// reports the largest scalarized improvement over the current strategy.
DeviationCheck verify_equilibrium(const GameState& state, const Weights& weights,
                                  int samples_per_player, double epsilon, std::uint64_t seed);

struct GameConfig {
  SolverConfig solver;
  int max_rounds = 20;
  double epsilon = 1e-6;
  int verify_samples = 1000;
  std::vector<std::size_t> order;  // update order; empty means player order
};

struct EquilibriumReport {
  int rounds_used = 0;
  bool converged = false;
  std::vector<ObjectiveVector> objectives;
  double max_deviation_gain = 0.0;
  EnergyBalance balance;
};

/// Sequential round-robin best responses. A player switches only when the new
/// strategy improves its scalarized objective by more than epsilon; a round
/// without switches ends the run as converged.
EquilibriumReport run_to_equilibrium(GameState& state, const GameConfig& cfg);

}  // namespace drgame
