#pragma once

#include <span>

#include "drgame/domain.hpp"

namespace drgame {

/// Quadratic discomfort α·Δ² + β·Δ + δ per task, Δ in slots.
struct DiscomfortCoefficients {
  double alpha = 1.0;
  double beta = 0.0;
  double delta = 0.0;

  /// Throws InvalidCoefficients when any coefficient is negative.
  void validate() const;
};

/// Slots by which a run starting at `start_slot` overhangs the preferred
/// window. Zero inside it; the early or late overhang otherwise; the larger of
/// the two when the run covers the window on both sides. Distances are taken
/// along the admitted window, so wrapped windows measure circularly.
/// Throws InfeasibleStart when the run leaves the admitted window.
int time_shift(const Task& task, int start_slot, const TimeGrid& grid);

double task_discomfort(int shift, const DiscomfortCoefficients& coeffs);

/// Sum of task_discomfort over all shifts. Throws NegativeShift.
double discomfort_cost(std::span<const int> shifts, const DiscomfortCoefficients& coeffs);

}  // namespace drgame
