#pragma once

#include <span>
#include <string>
#include <vector>

#include "drgame/comfort.hpp"
#include "drgame/domain.hpp"
#include "drgame/pricing.hpp"

namespace drgame {

enum class PlayerKind { consumer, prosumer };

struct Player {
  std::string id;
  PlayerKind kind = PlayerKind::consumer;
  std::vector<Task> tasks;
  GenerationProfile generation;  // empty for consumers
  DiscomfortCoefficients discomfort;
};

/// Throws InfeasiblePlayer if a task is invalid or a consumer carries generation.
void validate_player(const Player& player, const TimeGrid& grid);

/// (energy cost, discomfort); both minimized. Cost is net of revenue for prosumers.
struct ObjectiveVector {
  double cost = 0.0;
  double discomfort = 0.0;

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Pareto dominance for minimization.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Objective evaluation for one player against a frozen load of everyone else.
/// The player's own profile is added to that load before pricing. Results are
/// bit-identical to composing player_profile, realtime_price,
/// consumer_energy_cost, prosumer_revenue and discomfort_cost.
class ScheduleEvaluator {
 public:
  ScheduleEvaluator(const Player& player, const LoadVector& others_load,
                    const CostCoefficients& coeffs, const TimeGrid& grid);

  /// Genes must be feasible; no checks are made.
  [[nodiscard]] ObjectiveVector operator()(std::span<const int> genes) const;

  /// Throws InfeasibleSchedule if any gene is outside its task's feasible starts.
  [[nodiscard]] ObjectiveVector checked(std::span<const int> genes) const;

  [[nodiscard]] double energy_cost(std::span<const int> genes) const;
  [[nodiscard]] double discomfort(std::span<const int> genes) const;
  [[nodiscard]] double revenue() const { return revenue_; }

  [[nodiscard]] const Player& player() const { return *player_; }
  [[nodiscard]] const TimeGrid& grid() const { return grid_; }

 private:
  const Player* player_;
  const CostCoefficients* coeffs_;
  TimeGrid grid_;
  std::vector<double> others_;
  // discomfort_[j][slot]; only feasible slots are meaningful.
  std::vector<std::vector<double>> discomfort_;
  double revenue_ = 0.0;
};

ObjectiveVector evaluate(const Player& player, const Schedule& schedule,
                         const LoadVector& others_load, const CostCoefficients& coeffs,
                         const TimeGrid& grid);

}  // namespace drgame
