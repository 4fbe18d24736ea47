#include "drgame/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace drgame {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<ObjectiveVector> objectives_of(std::span<const Chromosome> population) {
  std::vector<ObjectiveVector> out;
  out.reserve(population.size());
  for (const auto& c : population) {
    if (!c.objectives) throw Error(ErrorCode::UnevaluatedChromosome, "chromosome without objectives");
    out.push_back(*c.objectives);
  }
  return out;
}

// Better individual for tournaments and truncation: lower rank, then larger
// crowding distance.
bool crowded_less(const Chromosome& a, const Chromosome& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.crowding > b.crowding;
}

void assign_rank_and_crowding(std::vector<Chromosome>& pop) {
  const auto fronts = non_dominated_sort(std::span<const Chromosome>(pop));
  std::vector<ObjectiveVector> objs;
  for (std::size_t r = 0; r < fronts.size(); ++r) {
    objs.clear();
    for (auto i : fronts[r]) objs.push_back(*pop[i].objectives);
    const auto dist = crowding_distance(objs);
    for (std::size_t k = 0; k < fronts[r].size(); ++k) {
      pop[fronts[r][k]].rank = static_cast<int>(r);
      pop[fronts[r][k]].crowding = dist[k];
    }
  }
}

class Search {
 public:
  Search(const Player& player, const LoadVector& others, const CostCoefficients& coeffs,
         const TimeGrid& grid, const SolverConfig& cfg)
      : player_(player), grid_(grid), cfg_(cfg), eval_(player, others, coeffs, grid),
        rng_(cfg.rng_seed) {
    for (const auto& t : player.tasks) feasible_.push_back(feasible_starts(t, grid));
    const double tasks = std::max<std::size_t>(1, player.tasks.size());
    mutation_rate_ = cfg.mutation_rate.value_or(1.0 / tasks);
  }

  ParetoFront run(const EvolveOptions& options) {
    auto pop = initial_population(options.seeds);
    assign_rank_and_crowding(pop);
    if (options.observer) options.observer(0, pop);

    for (int g = 1; g <= cfg_.generations; ++g) {
      auto offspring = make_offspring(pop);
      pop.insert(pop.end(), std::make_move_iterator(offspring.begin()),
                 std::make_move_iterator(offspring.end()));
      pop = environmental_selection(std::move(pop));
      assign_rank_and_crowding(pop);
      if (options.observer) options.observer(g, pop);
    }
    return final_front(pop);
  }

 private:
  Chromosome make(std::vector<int> genes) {
    Chromosome c;
    c.objectives = eval_(genes);
    c.genes = std::move(genes);
    return c;
  }

  int random_start(std::size_t task) {
    const auto& f = feasible_[task];
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    return f[pick(rng_)];
  }

  std::vector<Chromosome> initial_population(const std::vector<std::vector<int>>& seeds) {
    const auto n = static_cast<std::size_t>(cfg_.population_size);
    const auto& tasks = player_.tasks;
    std::vector<Chromosome> pop;
    pop.reserve(2 * n);

    std::vector<int> preferred(tasks.size());
    std::vector<int> earliest(tasks.size());
    for (std::size_t j = 0; j < tasks.size(); ++j) {
      preferred[j] = nearest_feasible_start(tasks[j], tasks[j].preferred_start_slot, grid_);
      earliest[j] = feasible_[j].front();
    }
    pop.push_back(make(std::move(preferred)));
    pop.push_back(make(std::move(earliest)));
    for (const auto& s : seeds) {
      if (pop.size() >= n) break;
      if (s.size() != tasks.size()) {
        throw Error(ErrorCode::InfeasibleSchedule, "seed individual has the wrong length");
      }
      auto genes = s;
      repair(genes, tasks, grid_);
      pop.push_back(make(std::move(genes)));
    }
    while (pop.size() < n) {
      std::vector<int> genes(tasks.size());
      for (std::size_t j = 0; j < tasks.size(); ++j) genes[j] = random_start(j);
      pop.push_back(make(std::move(genes)));
    }
    pop.resize(n);
    return pop;
  }

  const Chromosome& tournament(const std::vector<Chromosome>& pop) {
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    const Chromosome* best = &pop[pick(rng_)];
    for (int k = 1; k < cfg_.tournament_size; ++k) {
      const Chromosome* other = &pop[pick(rng_)];
      if (crowded_less(*other, *best)) best = other;
    }
    return *best;
  }

  std::vector<Chromosome> make_offspring(const std::vector<Chromosome>& pop) {
    const auto n = static_cast<std::size_t>(cfg_.population_size);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Chromosome> out;
    out.reserve(n);
    while (out.size() < n) {
      auto a = tournament(pop).genes;
      auto b = tournament(pop).genes;
      if (unit(rng_) < cfg_.crossover_rate) {
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (unit(rng_) < 0.5) std::swap(a[j], b[j]);
        }
      }
      for (auto* child : {&a, &b}) {
        for (std::size_t j = 0; j < child->size(); ++j) {
          if (unit(rng_) < mutation_rate_) (*child)[j] = random_start(j);
        }
        repair(*child, player_.tasks, grid_);
      }
      out.push_back(make(std::move(a)));
      if (out.size() < n) out.push_back(make(std::move(b)));
    }
    return out;
  }

  // Elitist (rank, crowding) truncation of parents and offspring. Duplicate
  // genomes only fill the population when there are too few distinct ones.
  std::vector<Chromosome> environmental_selection(std::vector<Chromosome> combined) {
    const auto n = static_cast<std::size_t>(cfg_.population_size);
    std::vector<Chromosome> unique;
    std::vector<Chromosome> duplicates;
    std::set<std::vector<int>> seen;
    for (auto& c : combined) {
      if (seen.insert(c.genes).second) {
        unique.push_back(std::move(c));
      } else {
        duplicates.push_back(std::move(c));
      }
    }

    std::vector<Chromosome> next;
    next.reserve(n);
    const auto fronts = non_dominated_sort(std::span<const Chromosome>(unique));
    std::vector<ObjectiveVector> objs;
    for (const auto& front : fronts) {
      if (next.size() == n) break;
      if (next.size() + front.size() <= n) {
        for (auto i : front) next.push_back(std::move(unique[i]));
        continue;
      }
      objs.clear();
      for (auto i : front) objs.push_back(*unique[i].objectives);
      const auto dist = crowding_distance(objs);
      std::vector<std::size_t> order(front.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return dist[x] > dist[y]; });
      for (std::size_t k = 0; next.size() < n; ++k) next.push_back(std::move(unique[front[order[k]]]));
    }
    for (std::size_t k = 0; next.size() < n && k < duplicates.size(); ++k) {
      next.push_back(std::move(duplicates[k]));
    }
    return next;
  }

  ParetoFront final_front(const std::vector<Chromosome>& pop) {
    ParetoFront front;
    std::set<std::vector<int>> seen;
    for (const auto& c : pop) {
      if (c.rank == 0 && seen.insert(c.genes).second) front.members.push_back(c);
    }
    std::sort(front.members.begin(), front.members.end(), [](const Chromosome& a, const Chromosome& b) {
      if (a.objectives->cost != b.objectives->cost) return a.objectives->cost < b.objectives->cost;
      if (a.objectives->discomfort != b.objectives->discomfort) {
        return a.objectives->discomfort < b.objectives->discomfort;
      }
      return a.genes < b.genes;
    });
    return front;
  }

  const Player& player_;
  TimeGrid grid_;
  const SolverConfig& cfg_;
  ScheduleEvaluator eval_;
  std::mt19937_64 rng_;
  std::vector<std::vector<int>> feasible_;
  double mutation_rate_ = 0.0;
};

}  // namespace

void SolverConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (population_size < 4 || population_size % 2 != 0) bad("population_size must be even and >= 4");
  if (generations < 0) bad("generations must be non-negative");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) bad("crossover_rate must lie in [0, 1]");
  if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0)) {
    bad("mutation_rate must lie in [0, 1]");
  }
  if (tournament_size < 1) bad("tournament_size must be positive");
  const auto& w = selection_weights;
  if (!(w.cost >= 0.0) || !(w.discomfort >= 0.0) || (w.cost == 0.0 && w.discomfort == 0.0)) {
    bad("selection weights must be non-negative and not both zero");
  }
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectiveVector> points) {
  // Two-objective sweep: after a lexicographic sort, a point joins the first
  // front whose most recent member does not dominate it.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (points[x].cost != points[y].cost) return points[x].cost < points[y].cost;
    return points[x].discomfort < points[y].discomfort;
  });

  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> tail;  // last member added to each front
  for (auto i : order) {
    std::size_t k = 0;
    while (k < fronts.size() && dominates(points[tail[k]], points[i])) ++k;
    if (k == fronts.size()) {
      fronts.emplace_back();
      tail.push_back(i);
    }
    fronts[k].push_back(i);
    tail[k] = i;
  }
  for (auto& f : fronts) std::sort(f.begin(), f.end());
  return fronts;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const Chromosome> population) {
  return non_dominated_sort(objectives_of(population));
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), kInf);
    return dist;
  }
  std::vector<std::size_t> order(n);
  for (auto member : {&ObjectiveVector::cost, &ObjectiveVector::discomfort}) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return front[x].*member < front[y].*member;
    });
    const double lo = front[order.front()].*member;
    const double hi = front[order.back()].*member;
    const double range = hi - lo;
    if (!(range > 0.0)) continue;
    dist[order.front()] = kInf;
    dist[order.back()] = kInf;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      dist[order[k]] += (front[order[k + 1]].*member - front[order[k - 1]].*member) / range;
    }
  }
  return dist;
}

std::vector<double> crowding_distance(std::span<const Chromosome> front) {
  return crowding_distance(objectives_of(front));
}

void repair(std::vector<int>& genes, std::span<const Task> tasks, const TimeGrid& grid) {
  for (std::size_t j = 0; j < genes.size() && j < tasks.size(); ++j) {
    if (!is_feasible_start(tasks[j], genes[j], grid)) {
      genes[j] = nearest_feasible_start(tasks[j], genes[j], grid);
    }
  }
}

ParetoFront evolve(const Player& player, const LoadVector& others_load,
                   const CostCoefficients& coeffs, const TimeGrid& grid, const SolverConfig& cfg,
                   const EvolveOptions& options) {
  cfg.validate();
  validate_player(player, grid);
  return Search(player, others_load, coeffs, grid, cfg).run(options);
}

FrontScale front_scale(const ParetoFront& front) {
  if (front.members.empty()) throw Error(ErrorCode::EmptyFront, "cannot scale an empty front");
  const auto objs = objectives_of(front.members);
  auto [cmin, cmax] = std::minmax_element(objs.begin(), objs.end(), [](auto& a, auto& b) {
    return a.cost < b.cost;
  });
  auto [dmin, dmax] = std::minmax_element(objs.begin(), objs.end(), [](auto& a, auto& b) {
    return a.discomfort < b.discomfort;
  });
  FrontScale s;
  s.cost_min = cmin->cost;
  s.cost_span = cmax->cost > cmin->cost ? cmax->cost - cmin->cost : 1.0;
  s.discomfort_min = dmin->discomfort;
  s.discomfort_span = dmax->discomfort > dmin->discomfort ? dmax->discomfort - dmin->discomfort : 1.0;
  return s;
}

double scalarize(const ObjectiveVector& v, const Weights& w, const FrontScale& scale) {
  return w.cost * (v.cost - scale.cost_min) / scale.cost_span +
         w.discomfort * (v.discomfort - scale.discomfort_min) / scale.discomfort_span;
}

Chromosome select_strategy(const ParetoFront& front, const Weights& weights) {
  if (front.members.empty()) throw Error(ErrorCode::EmptyFront, "cannot select from an empty front");
  return select_strategy(front, weights, front_scale(front));
}

Chromosome select_strategy(const ParetoFront& front, const Weights& weights, const FrontScale& scale) {
  if (front.members.empty()) throw Error(ErrorCode::EmptyFront, "cannot select from an empty front");
  const Chromosome* best = nullptr;
  double best_score = kInf;
  for (const auto& m : front.members) {
    if (!m.objectives) throw Error(ErrorCode::UnevaluatedChromosome, "front member without objectives");
    const double score = scalarize(*m.objectives, weights, scale);
    bool better = best == nullptr || score < best_score;
    if (!better && score == best_score) {
      const double c = m.objectives->cost;
      const double bc = best->objectives->cost;
      better = c < bc || (c == bc && m.genes < best->genes);
    }
    if (better) {
      best = &m;
      best_score = score;
    }
  }
  return *best;
}

}  // namespace drgame
