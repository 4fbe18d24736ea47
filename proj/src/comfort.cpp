#include "drgame/comfort.hpp"

#include <algorithm>

namespace drgame {

void DiscomfortCoefficients::validate() const {
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(delta >= 0.0)) {
    throw Error(ErrorCode::InvalidCoefficients, "alpha, beta and delta must be non-negative");
  }
}

int time_shift(const Task& task, int start_slot, const TimeGrid& grid) {
  if (!is_feasible_start(task, start_slot, grid)) {
    throw Error(ErrorCode::InfeasibleStart,
                "slot " + std::to_string(start_slot) + " for task '" + task.id + "'");
  }
  // Everything below is in offsets from the earliest start, where the window
  // is a plain interval even if it wraps midnight.
  const int start = offset_from_earliest(task, start_slot, grid);
  const int finish = start + task.duration_slots;
  const auto pref = preferred_offsets(task, grid);

  if (start >= pref.begin && finish <= pref.end) return 0;
  if (start <= pref.begin && finish <= pref.end) return pref.begin - start;
  if (start >= pref.begin && finish >= pref.end) return finish - pref.end;
  // Run overhangs the preferred window on both sides.
  return std::max(pref.begin - start, finish - pref.end);
}

double task_discomfort(int shift, const DiscomfortCoefficients& coeffs) {
  const double d = shift;
  return coeffs.alpha * d * d + coeffs.beta * d + coeffs.delta;
}

double discomfort_cost(std::span<const int> shifts, const DiscomfortCoefficients& coeffs) {
  double total = 0.0;
  for (int s : shifts) {
    if (s < 0) throw Error(ErrorCode::NegativeShift, "shift " + std::to_string(s));
    total += task_discomfort(s, coeffs);
  }
  return total;
}

}  // namespace drgame
