#include "drgame/objectives.hpp"

namespace drgame {

void validate_player(const Player& player, const TimeGrid& grid) {
  for (const auto& task : player.tasks) {
    if (auto v = validate_task(task, grid); !v.ok()) {
      throw Error(ErrorCode::InfeasiblePlayer, "player '" + player.id + "': " + v.message);
    }
  }
  if (player.kind == PlayerKind::consumer && player.generation.total() != 0.0) {
    throw Error(ErrorCode::InfeasiblePlayer, "consumer '" + player.id + "' has generation");
  }
  if (!player.generation.energy_kwh.empty() &&
      player.generation.energy_kwh.size() != static_cast<std::size_t>(grid.slots_per_day)) {
    throw Error(ErrorCode::InfeasiblePlayer, "player '" + player.id + "': generation length");
  }
  player.discomfort.validate();
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.cost <= b.cost && a.discomfort <= b.discomfort &&
         (a.cost < b.cost || a.discomfort < b.discomfort);
}

ScheduleEvaluator::ScheduleEvaluator(const Player& player, const LoadVector& others_load,
                                     const CostCoefficients& coeffs, const TimeGrid& grid)
    : player_(&player), coeffs_(&coeffs), grid_(grid), others_(others_load.energy_kwh) {
  const auto n = static_cast<std::size_t>(grid.slots_per_day);
  if (others_.size() != n || coeffs.slots() != n) {
    throw Error(ErrorCode::LengthMismatch, "others' load / coefficients do not match the grid");
  }
  discomfort_.resize(player.tasks.size());
  for (std::size_t j = 0; j < player.tasks.size(); ++j) {
    discomfort_[j].assign(n, 0.0);
    for (int s : feasible_starts(player.tasks[j], grid)) {
      discomfort_[j][static_cast<std::size_t>(s)] =
          task_discomfort(time_shift(player.tasks[j], s, grid), player.discomfort);
    }
  }
  if (player.kind == PlayerKind::prosumer) revenue_ = prosumer_revenue(player.generation);
}

double ScheduleEvaluator::energy_cost(std::span<const int> genes) const {
  std::vector<double> own(others_.size(), 0.0);
  const auto& tasks = player_->tasks;
  for (std::size_t j = 0; j < tasks.size(); ++j) accumulate_task(tasks[j], genes[j], grid_, own);
  double cost = 0.0;
  for (std::size_t t = 0; t < own.size(); ++t) {
    cost += price_at(others_[t] + own[t], coeffs_->a[t], coeffs_->b[t]) * own[t];
  }
  return cost;
}

double ScheduleEvaluator::discomfort(std::span<const int> genes) const {
  double total = 0.0;
  for (std::size_t j = 0; j < discomfort_.size(); ++j) {
    total += discomfort_[j][static_cast<std::size_t>(genes[j])];
  }
  return total;
}

ObjectiveVector ScheduleEvaluator::operator()(std::span<const int> genes) const {
  return {energy_cost(genes) - revenue_, discomfort(genes)};
}

ObjectiveVector ScheduleEvaluator::checked(std::span<const int> genes) const {
  const auto& tasks = player_->tasks;
  if (genes.size() != tasks.size()) {
    throw Error(ErrorCode::InfeasibleSchedule, "player '" + player_->id + "': expected " +
                                                   std::to_string(tasks.size()) + " starts");
  }
  for (std::size_t j = 0; j < tasks.size(); ++j) {
    if (!is_feasible_start(tasks[j], genes[j], grid_)) {
      throw Error(ErrorCode::InfeasibleSchedule,
                  "player '" + player_->id + "', task '" + tasks[j].id + "' at slot " +
                      std::to_string(genes[j]));
    }
  }
  return (*this)(genes);
}

ObjectiveVector evaluate(const Player& player, const Schedule& schedule,
                         const LoadVector& others_load, const CostCoefficients& coeffs,
                         const TimeGrid& grid) {
  return ScheduleEvaluator(player, others_load, coeffs, grid).checked(schedule.start_slots);
}

}  // namespace drgame
