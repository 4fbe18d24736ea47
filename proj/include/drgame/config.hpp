#pragma once

#include <filesystem>
#include <iosfwd>

#include "drgame/scenarios.hpp"

namespace drgame {

// Keyed text config: one `key = value` per line, '#' comments, optional
// `[section]` headers (ignored). Values are JSON literals, e.g.
//
//   [pricing]
//   tou_tiers = [[0, 7, 0.08], [7, 18, 0.12], [18, 22, 0.20], [22, 24, 0.12]]
//   a_coeff = 0.002
//
// Recognized keys: slots_per_day, tou_tiers, a_coeff, c_coeff, revenue_rate,
// solar_peak_kw, alpha, beta, delta, population, generations, crossover_rate,
// mutation_rate, tournament_size, seed, w_cost, w_discomfort, max_rounds,
// epsilon, verify_samples, players, prosumer_fraction, tasks_min.
// Unknown keys throw InvalidConfig.

void apply_config(std::istream& in, ExperimentConfig& config);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

}  // namespace drgame
