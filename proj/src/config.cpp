#include "drgame/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <string>

#include <json.hpp>

namespace drgame {
namespace {

using json = nlohmann::json;
using Setter = std::function<void(ExperimentConfig&, const json&)>;

template <typename T>
T as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidConfig, "bad value for '" + key + "'");
  }
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"slots_per_day", [](auto& c, auto& v) { c.grid = TimeGrid::with_slots(as<int>(v, "slots_per_day")); }},
      {"tou_tiers",
       [](auto& c, auto& v) {
         c.tariff.tou_tiers.clear();
         for (const auto& tier : as<std::vector<std::vector<double>>>(v, "tou_tiers")) {
           if (tier.size() != 3) throw Error(ErrorCode::InvalidConfig, "tou tier needs [start_h, end_h, rate]");
           c.tariff.tou_tiers.push_back({tier[0], tier[1], tier[2]});
         }
       }},
      {"a_coeff", [](auto& c, auto& v) { c.tariff.a_coeff = as<double>(v, "a_coeff"); }},
      {"c_coeff", [](auto& c, auto& v) { c.tariff.c_coeff = as<double>(v, "c_coeff"); }},
      {"revenue_rate", [](auto& c, auto& v) { c.population.revenue_rate = as<double>(v, "revenue_rate"); }},
      {"solar_peak_kw", [](auto& c, auto& v) { c.population.solar_peak_kw = as<double>(v, "solar_peak_kw"); }},
      {"alpha", [](auto& c, auto& v) { c.discomfort.alpha = as<double>(v, "alpha"); }},
      {"beta", [](auto& c, auto& v) { c.discomfort.beta = as<double>(v, "beta"); }},
      {"delta", [](auto& c, auto& v) { c.discomfort.delta = as<double>(v, "delta"); }},
      {"population", [](auto& c, auto& v) { c.game.solver.population_size = as<int>(v, "population"); }},
      {"generations", [](auto& c, auto& v) { c.game.solver.generations = as<int>(v, "generations"); }},
      {"crossover_rate", [](auto& c, auto& v) { c.game.solver.crossover_rate = as<double>(v, "crossover_rate"); }},
      {"mutation_rate", [](auto& c, auto& v) { c.game.solver.mutation_rate = as<double>(v, "mutation_rate"); }},
      {"tournament_size", [](auto& c, auto& v) { c.game.solver.tournament_size = as<int>(v, "tournament_size"); }},
      {"seed", [](auto& c, auto& v) { c.game.solver.rng_seed = as<std::uint64_t>(v, "seed"); }},
      {"w_cost", [](auto& c, auto& v) { c.tradeoff_weights.cost = as<double>(v, "w_cost"); }},
      {"w_discomfort", [](auto& c, auto& v) { c.tradeoff_weights.discomfort = as<double>(v, "w_discomfort"); }},
      {"max_rounds", [](auto& c, auto& v) { c.game.max_rounds = as<int>(v, "max_rounds"); }},
      {"epsilon", [](auto& c, auto& v) { c.game.epsilon = as<double>(v, "epsilon"); }},
      {"verify_samples", [](auto& c, auto& v) { c.game.verify_samples = as<int>(v, "verify_samples"); }},
      {"players", [](auto& c, auto& v) { c.population.players = as<int>(v, "players"); }},
      {"prosumer_fraction",
       [](auto& c, auto& v) { c.population.prosumer_fraction = as<double>(v, "prosumer_fraction"); }},
      {"tasks_min", [](auto& c, auto& v) { c.population.tasks_min = as<int>(v, "tasks_min"); }},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

void apply_config(std::istream& in, ExperimentConfig& config) {
  const TimeGrid grid_before = config.grid;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const auto it = setters().find(key);
    if (it == setters().end()) throw Error(ErrorCode::InvalidConfig, "unknown key '" + key + "'");
    json value;
    try {
      value = json::parse(trim(line.substr(eq + 1)));
    } catch (const json::parse_error&) {
      throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(line_no) + ": bad value");
    }
    it->second(config, value);
  }
  // The bundled catalog is expressed in slots of the grid it was built on.
  if (!(config.grid == grid_before)) config.catalog = table1_catalog(config.grid);

  config.discomfort.validate();
  config.game.solver.validate();
  (void)config.coefficients();
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config " + path.string());
  auto config = ExperimentConfig::defaults();
  apply_config(in, config);
  return config;
}

}  // namespace drgame
