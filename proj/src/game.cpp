#include "drgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace drgame {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ b);
}

GameState make_game_state(std::vector<Player> players, CostCoefficients coeffs, TimeGrid grid) {
  coeffs.validate();
  if (coeffs.slots() != static_cast<std::size_t>(grid.slots_per_day)) {
    throw Error(ErrorCode::LengthMismatch, "coefficients do not match the grid");
  }
  GameState state;
  state.coeffs = std::move(coeffs);
  state.grid = grid;
  for (const auto& p : players) validate_player(p, grid);
  state.players = std::move(players);
  for (const auto& p : state.players) {
    Chromosome c;
    c.genes.reserve(p.tasks.size());
    for (const auto& t : p.tasks) c.genes.push_back(nearest_feasible_start(t, t.preferred_start_slot, grid));
    state.strategies.push_back(std::move(c));
  }
  state.scales.assign(state.players.size(), std::nullopt);
  state.fronts.assign(state.players.size(), ParetoFront{});
  refresh(state);
  return state;
}

ConsumptionProfile strategy_profile(const GameState& state, std::size_t player) {
  return player_profile(Schedule{state.strategies[player].genes}, state.players[player].tasks,
                        state.grid);
}

LoadVector total_load(const GameState& state) {
  LoadVector load{std::vector<double>(static_cast<std::size_t>(state.grid.slots_per_day), 0.0)};
  for (std::size_t i = 0; i < state.players.size(); ++i) {
    const auto p = strategy_profile(state, i);
    for (std::size_t t = 0; t < p.energy_kwh.size(); ++t) load.energy_kwh[t] += p.energy_kwh[t];
  }
  return load;
}

LoadVector others_load(const GameState& state, std::size_t player) {
  LoadVector load{std::vector<double>(static_cast<std::size_t>(state.grid.slots_per_day), 0.0)};
  for (std::size_t i = 0; i < state.players.size(); ++i) {
    if (i == player) continue;
    const auto p = strategy_profile(state, i);
    for (std::size_t t = 0; t < p.energy_kwh.size(); ++t) load.energy_kwh[t] += p.energy_kwh[t];
  }
  return load;
}

void refresh(GameState& state) {
  state.price = realtime_price(total_load(state), state.coeffs);
  for (std::size_t i = 0; i < state.players.size(); ++i) {
    const ScheduleEvaluator eval(state.players[i], others_load(state, i), state.coeffs, state.grid);
    state.strategies[i].objectives = eval.checked(state.strategies[i].genes);
  }
}

BestResponse best_response(const GameState& state, std::size_t player, const SolverConfig& cfg) {
  const auto& p = state.players.at(player);
  const auto others = others_load(state, player);
  const auto& incumbent = state.strategies[player].genes;

  EvolveOptions options;
  options.seeds.push_back(incumbent);
  BestResponse br;
  br.front = evolve(p, others, state.coeffs, state.grid, cfg, options);
  br.scale = state.scales[player].value_or(front_scale(br.front));
  br.strategy = select_strategy(br.front, cfg.selection_weights, br.scale);

  const ScheduleEvaluator eval(p, others, state.coeffs, state.grid);
  br.incumbent_score = scalarize(eval(incumbent), cfg.selection_weights, br.scale);
  br.score = scalarize(*br.strategy.objectives, cfg.selection_weights, br.scale);
  return br;
}

std::int64_t EnergyBalance::to_units(double kwh) {
  return static_cast<std::int64_t>(std::llround(kwh / kwh_per_unit));
}

EnergyBalance energy_balance(const GameState& state) {
  const auto n = static_cast<std::size_t>(state.grid.slots_per_day);
  const auto demand = total_load(state);
  std::vector<double> generation(n, 0.0);
  for (const auto& p : state.players) {
    if (p.kind != PlayerKind::prosumer) continue;
    for (std::size_t t = 0; t < n && t < p.generation.energy_kwh.size(); ++t) {
      generation[t] += p.generation.energy_kwh[t];
    }
  }
  EnergyBalance b;
  b.demand.resize(n);
  b.generation.resize(n);
  b.utility.resize(n);
  b.surplus.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    b.demand[t] = EnergyBalance::to_units(demand.energy_kwh[t]);
    b.generation[t] = EnergyBalance::to_units(generation[t]);
    b.utility[t] = std::max<std::int64_t>(b.demand[t] - b.generation[t], 0);
    b.surplus[t] = std::max<std::int64_t>(b.generation[t] - b.demand[t], 0);
  }
  return b;
}

DeviationCheck verify_equilibrium(const GameState& state, const Weights& weights,
                                  int samples_per_player, double epsilon, std::uint64_t seed) {
  DeviationCheck check;
  for (std::size_t i = 0; i < state.players.size(); ++i) {
    const auto& p = state.players[i];
    const ScheduleEvaluator eval(p, others_load(state, i), state.coeffs, state.grid);
    const FrontScale scale = state.scales[i].value_or(FrontScale{});
    const double current = scalarize(eval(state.strategies[i].genes), weights, scale);

    std::vector<std::vector<int>> feasible;
    for (const auto& t : p.tasks) feasible.push_back(feasible_starts(t, state.grid));

    auto consider = [&](const std::vector<int>& genes) {
      const double gain = current - scalarize(eval(genes), weights, scale);
      if (gain > check.max_gain) {
        check.max_gain = gain;
        check.worst_player = i;
      }
    };

    std::vector<int> genes(p.tasks.size());
    for (std::size_t j = 0; j < p.tasks.size(); ++j) {
      genes[j] = nearest_feasible_start(p.tasks[j], p.tasks[j].preferred_start_slot, state.grid);
    }
    consider(genes);
    for (std::size_t j = 0; j < p.tasks.size(); ++j) genes[j] = feasible[j].front();
    consider(genes);

    std::mt19937_64 rng(derive_seed(seed, i));
    for (int s = 0; s < samples_per_player; ++s) {
      for (std::size_t j = 0; j < p.tasks.size(); ++j) {
        std::uniform_int_distribution<std::size_t> pick(0, feasible[j].size() - 1);
        genes[j] = feasible[j][pick(rng)];
      }
      consider(genes);
    }
  }
  check.epsilon_nash = check.max_gain <= epsilon;
  return check;
}

EquilibriumReport run_to_equilibrium(GameState& state, const GameConfig& cfg) {
  if (cfg.max_rounds < 1) throw Error(ErrorCode::InvalidConfig, "max_rounds must be >= 1");
  if (!(cfg.epsilon > 0.0)) throw Error(ErrorCode::InvalidConfig, "epsilon must be positive");
  cfg.solver.validate();

  std::vector<std::size_t> order = cfg.order;
  if (order.empty()) {
    order.resize(state.players.size());
    std::iota(order.begin(), order.end(), 0);
  }

  state.converged = false;
  state.round = 0;
  while (state.round < cfg.max_rounds) {
    ++state.round;
    bool changed = false;
    for (auto i : order) {
      SolverConfig solver = cfg.solver;
      solver.rng_seed = derive_seed(cfg.solver.rng_seed, static_cast<std::uint64_t>(state.round), i);
      auto br = best_response(state, i, solver);
      if (!state.scales[i]) state.scales[i] = br.scale;
      state.fronts[i] = std::move(br.front);
      if (br.incumbent_score - br.score > cfg.epsilon) {
        state.strategies[i] = std::move(br.strategy);
        changed = true;
      }
      state.price = realtime_price(total_load(state), state.coeffs);
    }
    if (!changed) {
      state.converged = true;
      break;
    }
  }
  refresh(state);

  EquilibriumReport report;
  report.rounds_used = state.round;
  report.converged = state.converged;
  for (const auto& s : state.strategies) report.objectives.push_back(*s.objectives);
  report.max_deviation_gain =
      verify_equilibrium(state, cfg.solver.selection_weights, cfg.verify_samples, cfg.epsilon,
                         derive_seed(cfg.solver.rng_seed, 0xC0FFEE))
          .max_gain;
  report.balance = energy_balance(state);
  return report;
}

}  // namespace drgame
