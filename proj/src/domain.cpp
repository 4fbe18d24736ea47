#include "drgame/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace drgame {

TimeGrid TimeGrid::with_slots(int slots) {
  if (slots < 1) {
    throw Error(ErrorCode::InvalidConfig, "slots_per_day must be positive");
  }
  return TimeGrid{slots, horizon_hours / slots};
}

int TimeGrid::to_slot(double hours) const {
  if (!(hours >= 0.0 && hours <= horizon_hours)) {
    throw Error(ErrorCode::SlotOutOfRange, "hour " + std::to_string(hours) + " outside [0, 24]");
  }
  const double exact = hours / slot_hours;
  const double rounded = std::round(exact);
  if (std::abs(exact - rounded) > 1e-9) {
    throw Error(ErrorCode::SlotOutOfRange,
                "hour " + std::to_string(hours) + " is not on the slot grid");
  }
  return static_cast<int>(rounded);
}

double ConsumptionProfile::total() const {
  return std::accumulate(energy_kwh.begin(), energy_kwh.end(), 0.0);
}

double LoadVector::total() const { return std::accumulate(energy_kwh.begin(), energy_kwh.end(), 0.0); }

double LoadVector::peak() const {
  return energy_kwh.empty() ? 0.0 : *std::max_element(energy_kwh.begin(), energy_kwh.end());
}

int circular_length(int from, int to, int slots_per_day) {
  return to >= from ? to - from : to + slots_per_day - from;
}

int admitted_length(const Task& task, const TimeGrid& grid) {
  return circular_length(task.earliest_start_slot, task.latest_finish_slot, grid.slots_per_day);
}

int offset_from_earliest(const Task& task, int slot, const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  return ((slot - task.earliest_start_slot) % n + n) % n;
}

PreferredOffsets preferred_offsets(const Task& task, const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  const int start = task.preferred_start_slot % n;
  const int begin = offset_from_earliest(task, start, grid);
  return {begin, begin + circular_length(start, task.preferred_finish_slot, n)};
}

TaskValidation validate_task(const Task& task, const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  auto fail = [&](ErrorCode code, std::string msg) {
    return TaskValidation{code, "task '" + task.id + "': " + std::move(msg)};
  };

  if (!(task.power_kw > 0.0)) {
    return fail(ErrorCode::NonPositivePower, "power must be positive");
  }
  if (task.duration_slots < 1) {
    return fail(ErrorCode::WindowTooShort, "duration must be at least one slot");
  }
  auto in_range = [n](int s, int hi_inclusive) { return s >= 0 && s <= hi_inclusive; };
  if (!in_range(task.earliest_start_slot, n - 1) || !in_range(task.latest_finish_slot, n) ||
      !in_range(task.preferred_start_slot, n) || !in_range(task.preferred_finish_slot, n)) {
    return fail(ErrorCode::SlotOutOfRange, "window boundary outside the day");
  }

  const int window = admitted_length(task, grid);
  if (task.duration_slots > window) {
    return fail(ErrorCode::WindowTooShort, "duration " + std::to_string(task.duration_slots) +
                                               " exceeds admitted window " + std::to_string(window));
  }
  const auto pref = preferred_offsets(task, grid);
  if (pref.end > window) {
    return fail(ErrorCode::PreferredOutsideAdmitted, "preferred window leaves the admitted window");
  }
  if (pref.end - pref.begin < task.duration_slots) {
    return fail(ErrorCode::PreferredTooShort, "preferred window shorter than the duration");
  }
  return {};
}

bool is_feasible_start(const Task& task, int slot, const TimeGrid& grid) {
  if (slot < 0 || slot >= grid.slots_per_day) return false;
  return offset_from_earliest(task, slot, grid) <= admitted_length(task, grid) - task.duration_slots;
}

std::vector<int> feasible_starts(const Task& task, const TimeGrid& grid) {
  const int last = admitted_length(task, grid) - task.duration_slots;
  std::vector<int> out;
  if (last < 0) return out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  for (int o = 0; o <= last; ++o) {
    out.push_back((task.earliest_start_slot + o) % grid.slots_per_day);
  }
  return out;
}

int nearest_feasible_start(const Task& task, int slot, const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  const int last = admitted_length(task, grid) - task.duration_slots;
  if (last < 0) {
    throw Error(ErrorCode::WindowTooShort, "task '" + task.id + "' has no feasible start");
  }
  const int wrapped = ((slot % n) + n) % n;
  const int o = offset_from_earliest(task, wrapped, grid);
  if (o <= last) return wrapped;
  const int past_last = o - last;
  const int before_first = n - o;
  const int chosen = before_first <= past_last ? 0 : last;
  return (task.earliest_start_slot + chosen) % n;
}

void accumulate_task(const Task& task, int start_slot, const TimeGrid& grid, std::span<double> out) {
  const int n = grid.slots_per_day;
  const double per_slot = task.power_kw * grid.slot_hours;
  int idx = start_slot;
  for (int k = 0; k < task.duration_slots; ++k) {
    out[static_cast<std::size_t>(idx)] += per_slot;
    if (++idx == n) idx = 0;
  }
}

ConsumptionProfile task_profile(const Task& task, int start_slot, const TimeGrid& grid) {
  if (!is_feasible_start(task, start_slot, grid)) {
    throw Error(ErrorCode::InfeasibleStart,
                "slot " + std::to_string(start_slot) + " for task '" + task.id + "'");
  }
  ConsumptionProfile p{std::vector<double>(static_cast<std::size_t>(grid.slots_per_day), 0.0)};
  accumulate_task(task, start_slot, grid, p.energy_kwh);
  return p;
}

ConsumptionProfile player_profile(const Schedule& schedule, std::span<const Task> tasks,
                                  const TimeGrid& grid) {
  if (schedule.start_slots.size() != tasks.size()) {
    throw Error(ErrorCode::MissingTask, "schedule has " + std::to_string(schedule.start_slots.size()) +
                                            " starts for " + std::to_string(tasks.size()) + " tasks");
  }
  ConsumptionProfile p{std::vector<double>(static_cast<std::size_t>(grid.slots_per_day), 0.0)};
  for (std::size_t j = 0; j < tasks.size(); ++j) {
    const int start = schedule.start_slots[j];
    if (!is_feasible_start(tasks[j], start, grid)) {
      throw Error(ErrorCode::InfeasibleStart,
                  "slot " + std::to_string(start) + " for task '" + tasks[j].id + "'");
    }
    accumulate_task(tasks[j], start, grid, p.energy_kwh);
  }
  return p;
}

LoadVector aggregate_load(std::span<const ConsumptionProfile> profiles) {
  LoadVector load;
  if (profiles.empty()) return load;
  const std::size_t n = profiles.front().energy_kwh.size();
  load.energy_kwh.assign(n, 0.0);
  for (const auto& p : profiles) {
    if (p.energy_kwh.size() != n) {
      throw Error(ErrorCode::LengthMismatch, "profiles have different lengths");
    }
    for (std::size_t t = 0; t < n; ++t) load.energy_kwh[t] += p.energy_kwh[t];
  }
  return load;
}

}  // namespace drgame
