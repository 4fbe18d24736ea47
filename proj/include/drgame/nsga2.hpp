#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "drgame/objectives.hpp"

namespace drgame {

/// Weights for the final pick from a Pareto front.
struct Weights {
  double cost = 0.5;
  double discomfort = 0.5;

  friend bool operator==(const Weights&, const Weights&) = default;
};

struct SolverConfig {
  int population_size = 100;
  int generations = 200;
  double crossover_rate = 0.9;
  std::optional<double> mutation_rate;  // per gene; defaults to 1 / task count
  int tournament_size = 2;
  std::uint64_t rng_seed = 1;
  Weights selection_weights;

  /// Throws InvalidConfig.
  void validate() const;
};

struct Chromosome {
  std::vector<int> genes;  // start slot per task
  std::optional<ObjectiveVector> objectives;
  int rank = -1;
  double crowding = 0.0;
};

/// Rank-0 members of a final population, deduplicated by genes and ordered by
/// (cost, discomfort, genes).
struct ParetoFront {
  std::vector<Chromosome> members;
};

/// Fronts as index lists into the input, each sorted ascending. Front 0 is the
/// non-dominated set. Throws UnevaluatedChromosome.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectiveVector> points);
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const Chromosome> population);

/// Crowding distance of each member of one front. Objective extremes get +inf
/// unless the objective is constant across the front, in which case it adds 0.
/// Fronts of one or two members are all +inf.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);
std::vector<double> crowding_distance(std::span<const Chromosome> front);

/// Clamps each gene to the nearest feasible start of its task.
void repair(std::vector<int>& genes, std::span<const Task> tasks, const TimeGrid& grid);

/// Observer called after the initial population (generation 0) and after
/// every environmental selection.
using GenerationObserver = std::function<void(int generation, std::span<const Chromosome> population)>;

struct EvolveOptions {
  /// Extra individuals placed in the initial population after the
  /// preferred-start and earliest-start anchors (e.g. an incumbent strategy).
  std::vector<std::vector<int>> seeds;
  GenerationObserver observer;
};

/// NSGA-II over start slots for one player against a frozen load of the others.
/// Deterministic for a given cfg.rng_seed. Throws InfeasiblePlayer or InvalidConfig.
ParetoFront evolve(const Player& player, const LoadVector& others_load,
                   const CostCoefficients& coeffs, const TimeGrid& grid, const SolverConfig& cfg,
                   const EvolveOptions& options = {});

/// Min-max normalization of a front. Spans of zero are replaced by one, so a
/// constant objective normalizes to zero without dividing by zero.
struct FrontScale {
  double cost_min = 0.0;
  double cost_span = 1.0;
  double discomfort_min = 0.0;
  double discomfort_span = 1.0;
};

FrontScale front_scale(const ParetoFront& front);

double scalarize(const ObjectiveVector& v, const Weights& w, const FrontScale& scale);

/// Member minimizing the weighted normalized objectives; ties go to the lower
/// raw cost, then to the lexicographically smaller genes. Throws EmptyFront.
Chromosome select_strategy(const ParetoFront& front, const Weights& weights);
Chromosome select_strategy(const ParetoFront& front, const Weights& weights, const FrontScale& scale);

}  // namespace drgame
