#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the code
// path it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "drgame/game.hpp"

namespace drgame::testing {

inline TimeGrid grid48() { return TimeGrid{}; }

inline Task make_task(const char* id, double power, int st, int ft, int dur, int stp, int ftp) {
  Task t;
  t.id = id;
  t.power_kw = power;
  t.earliest_start_slot = st;
  t.latest_finish_slot = ft;
  t.duration_slots = dur;
  t.preferred_start_slot = stp;
  t.preferred_finish_slot = ftp;
  return t;
}

/// Valid random task; windows may wrap midnight. `max_window` bounds the
/// admitted window length.
inline Task random_task(std::mt19937_64& rng, int max_window = 47, const TimeGrid& grid = {}) {
  const int n = grid.slots_per_day;
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Task t;
  t.id = "task";
  t.power_kw = 0.1 * uni(1, 50);
  t.earliest_start_slot = uni(0, n - 1);
  const int window = uni(1, std::min(max_window, n - 1));
  const int end = t.earliest_start_slot + window;
  t.latest_finish_slot = end <= n ? end : end - n;
  t.duration_slots = uni(1, window);
  const int pref_len = uni(t.duration_slots, window);
  const int off = uni(0, window - pref_len);
  const int pbegin = t.earliest_start_slot + off;
  const int pend = pbegin + pref_len;
  t.preferred_start_slot = pbegin % n;
  t.preferred_finish_slot = pend <= n ? pend : pend - n;
  return t;
}

/// Slots occupied by a run, by direct enumeration of (start + k) mod n.
inline std::vector<int> occupied_slots(int start, int duration, int n) {
  std::vector<int> out;
  for (int k = 0; k < duration; ++k) out.push_back((start + k) % n);
  return out;
}

/// Energy per slot from the occupancy definition: power × slot length on each
/// occupied slot, summed over all (player, task) pairs.
inline std::vector<double> double_sum_load(const std::vector<std::vector<Task>>& tasks,
                                           const std::vector<std::vector<int>>& starts,
                                           const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  std::vector<double> load(static_cast<std::size_t>(n), 0.0);
  for (int t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      for (std::size_t j = 0; j < tasks[i].size(); ++j) {
        const auto occ = occupied_slots(starts[i][j], tasks[i][j].duration_slots, n);
        if (std::find(occ.begin(), occ.end(), t) != occ.end()) {
          load[static_cast<std::size_t>(t)] += tasks[i][j].power_kw * grid.slot_hours;
        }
      }
    }
  }
  return load;
}

/// Starts from the window definition: every slot s with the run
/// [s, s + D) contained in the admitted window, checked slot by slot.
inline std::vector<int> brute_force_starts(const Task& task, const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  std::vector<bool> admitted(static_cast<std::size_t>(n), false);
  const int len = task.latest_finish_slot >= task.earliest_start_slot
                      ? task.latest_finish_slot - task.earliest_start_slot
                      : task.latest_finish_slot + n - task.earliest_start_slot;
  std::vector<int> out;
  for (int s = 0; s < n; ++s) {
    // Offset walk from the window start; a run fits if its last slot's offset
    // stays below the window length.
    int off = 0;
    while ((task.earliest_start_slot + off) % n != s) ++off;
    if (off + task.duration_slots <= len) out.push_back(s);
  }
  (void)admitted;
  return out;
}

/// Every schedule of a player (Cartesian product of feasible starts).
inline std::vector<std::vector<int>> enumerate_schedules(const std::vector<Task>& tasks,
                                                         const TimeGrid& grid) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& t : tasks) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int s : brute_force_starts(t, grid)) {
        auto g = prefix;
        g.push_back(s);
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Objective vector computed slot by slot from the definitions.
inline ObjectiveVector direct_objectives(const Player& p, const std::vector<int>& genes,
                                         const std::vector<double>& others,
                                         const CostCoefficients& k, const TimeGrid& grid) {
  const int n = grid.slots_per_day;
  std::vector<double> own(static_cast<std::size_t>(n), 0.0);
  double discomfort = 0.0;
  for (std::size_t j = 0; j < p.tasks.size(); ++j) {
    const auto& t = p.tasks[j];
    for (int s : occupied_slots(genes[j], t.duration_slots, n)) own[static_cast<std::size_t>(s)] += t.power_kw * grid.slot_hours;
    // Overhang relative to the preferred window, measured along the admitted window.
    auto off = [&](int slot) { return ((slot - t.earliest_start_slot) % n + n) % n; };
    const int begin = off(t.preferred_start_slot % n);
    const int plen = t.preferred_finish_slot >= t.preferred_start_slot % n
                         ? t.preferred_finish_slot - t.preferred_start_slot % n
                         : t.preferred_finish_slot + n - t.preferred_start_slot % n;
    const int start = off(genes[j]);
    const int shift = std::max({0, begin - start, start + t.duration_slots - (begin + plen)});
    discomfort += p.discomfort.alpha * shift * shift + p.discomfort.beta * shift + p.discomfort.delta;
  }
  double cost = 0.0;
  for (int s = 0; s < n; ++s) {
    const auto u = static_cast<std::size_t>(s);
    cost += (k.a[u] * (others[u] + own[u]) + k.b[u]) * own[u];
  }
  if (p.kind == PlayerKind::prosumer) {
    for (double e : p.generation.energy_kwh) cost -= p.generation.revenue_rate * e;
  }
  return {cost, discomfort};
}

/// Non-dominated subset by pairwise comparison.
inline std::vector<std::size_t> pareto_indices(const std::vector<ObjectiveVector>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < pts.size() && !dominated; ++k) {
      const auto& a = pts[k];
      const auto& b = pts[i];
      dominated = a.cost <= b.cost && a.discomfort <= b.discomfort &&
                  (a.cost < b.cost || a.discomfort < b.discomfort);
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

/// Fronts by repeatedly peeling the non-dominated set.
inline std::vector<std::vector<std::size_t>> peel_fronts(const std::vector<ObjectiveVector>& pts) {
  std::vector<std::size_t> remaining(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) remaining[i] = i;
  std::vector<std::vector<std::size_t>> fronts;
  while (!remaining.empty()) {
    std::vector<ObjectiveVector> sub;
    for (auto i : remaining) sub.push_back(pts[i]);
    std::vector<std::size_t> front;
    for (auto k : pareto_indices(sub)) front.push_back(remaining[k]);
    std::sort(front.begin(), front.end());
    std::vector<std::size_t> rest;
    for (auto i : remaining) {
      if (!std::binary_search(front.begin(), front.end(), i)) rest.push_back(i);
    }
    fronts.push_back(std::move(front));
    remaining = std::move(rest);
  }
  return fronts;
}

/// Flat tariff with congestion coefficient `a` and base `b` on every slot.
inline CostCoefficients flat_coefficients(double a, double b, const TimeGrid& grid = {}) {
  const auto n = static_cast<std::size_t>(grid.slots_per_day);
  return {std::vector<double>(n, a), std::vector<double>(n, b), std::vector<double>(n, 0.0)};
}

inline Player consumer(const char* id, std::vector<Task> tasks, DiscomfortCoefficients d = {}) {
  Player p;
  p.id = id;
  p.tasks = std::move(tasks);
  p.discomfort = d;
  return p;
}

/// Two players with one single-slot task each and two feasible starts
/// (slots 40 and 41). Preferred windows cover both starts, so only cost
/// matters and the players gain by separating.
inline std::vector<Player> anti_coordination_players() {
  const Task t = make_task("appliance", 2.0, 40, 42, 1, 40, 42);
  return {consumer("p0", {t}), consumer("p1", {t})};
}

}  // namespace drgame::testing
