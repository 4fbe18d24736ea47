#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drgame/error.hpp"

namespace drgame {

/// Discrete day. Slot indices run over [0, slots_per_day); window boundaries
/// (finish slots) may also take the value slots_per_day.
struct TimeGrid {
  int slots_per_day = 48;
  double slot_hours = 0.5;

  static constexpr double horizon_hours = 24.0;

  /// Grid with `slots` equal slots over 24 h. Throws InvalidConfig if slots < 1.
  static TimeGrid with_slots(int slots);

  /// Converts an hour mark to a slot boundary; throws SlotOutOfRange if the
  /// hour is outside [0, 24] or not a multiple of slot_hours.
  [[nodiscard]] int to_slot(double hours) const;
  [[nodiscard]] double to_hours(int slot) const { return slot * slot_hours; }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// One schedulable appliance run. All times are slot boundaries on a TimeGrid.
/// A window whose finish is smaller than its start wraps around midnight.
struct Task {
  std::string id;
  double power_kw = 0.0;
  int duration_slots = 1;
  int earliest_start_slot = 0;
  int latest_finish_slot = 0;
  int preferred_start_slot = 0;
  int preferred_finish_slot = 0;

  [[nodiscard]] double energy_demand_kwh(const TimeGrid& grid) const {
    return power_kw * duration_slots * grid.slot_hours;
  }
};

/// Start slot per task, aligned with the owning player's task list.
struct Schedule {
  std::vector<int> start_slots;
};

/// Per-slot energy of one task or one player, in kWh.
struct ConsumptionProfile {
  std::vector<double> energy_kwh;

  [[nodiscard]] double total() const;
};

/// Per-slot aggregate energy over all players, in kWh.
struct LoadVector {
  std::vector<double> energy_kwh;

  [[nodiscard]] double total() const;
  [[nodiscard]] double peak() const;
};

struct TaskValidation {
  std::optional<ErrorCode> error;
  std::string message;

  [[nodiscard]] bool ok() const { return !error.has_value(); }
};

// Circular window arithmetic. Boundaries lie in [0, n]; a window [from, to]
// with to < from wraps midnight.
int circular_length(int from, int to, int slots_per_day);

/// Length in slots of the admitted window, wrapping if needed.
int admitted_length(const Task& task, const TimeGrid& grid);

/// Offset of `slot` from the task's earliest start, in [0, slots_per_day).
int offset_from_earliest(const Task& task, int slot, const TimeGrid& grid);

/// Preferred window as [begin, end] offsets from the earliest start.
struct PreferredOffsets {
  int begin = 0;
  int end = 0;
};
PreferredOffsets preferred_offsets(const Task& task, const TimeGrid& grid);

TaskValidation validate_task(const Task& task, const TimeGrid& grid);

/// True iff starting at `slot` keeps the whole run inside the admitted window.
bool is_feasible_start(const Task& task, int slot, const TimeGrid& grid);

/// All feasible start slots, ordered by offset from the earliest start (so a
/// wrapped window lists the evening slots before the early-morning ones).
std::vector<int> feasible_starts(const Task& task, const TimeGrid& grid);

/// Feasible start nearest (circularly) to `slot`; ties go to the earlier offset.
int nearest_feasible_start(const Task& task, int slot, const TimeGrid& grid);

ConsumptionProfile task_profile(const Task& task, int start_slot, const TimeGrid& grid);

/// Adds the task's rectangular profile into `out` without feasibility checks.
void accumulate_task(const Task& task, int start_slot, const TimeGrid& grid, std::span<double> out);

ConsumptionProfile player_profile(const Schedule& schedule, std::span<const Task> tasks,
                                  const TimeGrid& grid);

LoadVector aggregate_load(std::span<const ConsumptionProfile> profiles);

}  // namespace drgame
