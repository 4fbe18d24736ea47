#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "drgame/config.hpp"
#include "drgame/io.hpp"
#include "support.hpp"

using namespace drgame;
using namespace drgame::testing;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config() {
  auto c = ExperimentConfig::defaults();
  c.population.players = 6;
  c.game.solver.population_size = 20;
  c.game.solver.generations = 15;
  c.game.verify_samples = 100;
  return c;
}

fs::path scratch_dir(const char* name) {
  const auto dir = fs::temp_directory_path() / ("drgame_test_" + std::string(name));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("scenarios") {
  TEST_CASE("scenario specs and names") {
    CHECK_FALSE(ScenarioSpec::reference().optimize);
    CHECK(ScenarioSpec::cost().weights == Weights{1.0, 0.0});
    CHECK(ScenarioSpec::cost_discomfort().weights == Weights{0.5, 0.5});
    CHECK(parse_scenario("cost-discomfort") == ScenarioKind::cost_discomfort);
    CHECK(parse_scenario("Ref-sce") == ScenarioKind::reference);
    CHECK_THROWS_AS(parse_scenario("nope"), Error);
  }

  TEST_CASE("population generation") {
    const auto cfg = ExperimentConfig::defaults();
    const PopulationContext ctx{cfg.grid, 2.0, cfg.revenue_rate(), cfg.discomfort};
    const auto players = generate_population(30, 0.3, 8, cfg.catalog, 42, ctx);
    REQUIRE(players.size() == 30);
    int prosumers = 0;
    for (const auto& p : players) {
      CHECK(p.tasks.size() >= 8);
      CHECK_NOTHROW(validate_player(p, cfg.grid));
      if (p.kind == PlayerKind::prosumer) {
        ++prosumers;
        CHECK(p.generation.total() > 0.0);
      }
    }
    CHECK(prosumers == 9);

    for (const auto& p : generate_population(10, 0.0, 8, cfg.catalog, 1, ctx)) {
      CHECK(p.kind == PlayerKind::consumer);
    }

    const auto again = generate_population(30, 0.3, 8, cfg.catalog, 42, ctx);
    for (std::size_t i = 0; i < players.size(); ++i) {
      REQUIRE(again[i].tasks.size() == players[i].tasks.size());
      for (std::size_t j = 0; j < players[i].tasks.size(); ++j) {
        CHECK(again[i].tasks[j].preferred_start_slot == players[i].tasks[j].preferred_start_slot);
        CHECK(again[i].tasks[j].id == players[i].tasks[j].id);
      }
    }
    CHECK_THROWS_AS(generate_population(3, 0.3, 8, Catalog{}, 1, ctx), Error);
  }

  TEST_CASE("reference scenario has zero discomfort") {
    const auto cfg = small_config();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto r = run_scenario(ScenarioSpec::reference(), cfg, seed);
      CHECK(r.total_discomfort == 0.0);
      CHECK(r.total_cost > 0.0);
    }
  }

  TEST_CASE("reference rejects preferred windows that cannot hold the task") {
    auto cfg = small_config();
    cfg.catalog.entries.clear();
    Task t = make_task("bad", 1.0, 10, 30, 6, 12, 14);
    cfg.catalog.entries.push_back({t, true});
    CHECK_THROWS_AS(run_scenario(ScenarioSpec::reference(), cfg, 1), Error);
  }

  TEST_CASE("cost scenario is cheaper than the reference") {
    const auto cfg = small_config();
    const auto ref = run_scenario(ScenarioSpec::reference(), cfg, 3);
    const auto cost = run_scenario(ScenarioSpec::cost(), cfg, 3);
    CHECK(cost.total_cost < ref.total_cost);
    CHECK(cost.converged);
  }

  TEST_CASE("comparison table") {
    const auto cfg = small_config();
    const auto ref = run_scenario(ScenarioSpec::reference(), cfg, 1);
    const auto self = compare({ref});
    REQUIRE(self.rows.size() == 1);
    CHECK(self.rows[0].pct_cost_vs_ref == 0.0);
    CHECK_THROWS_AS(compare({run_scenario(ScenarioSpec::cost(), cfg, 1)}), Error);

    std::vector<ComparisonRow> rows{{"Ref-sce", 1, 100, 0, 0, 0},
                                    {"Cost-sce", 1, 60, 50, 0, 0},
                                    {"Cost-discomfort-sce", 1, 64, 40, 0, 0}};
    const auto t = compare_rows(rows);
    CHECK(t.rows[1].pct_cost_vs_ref == doctest::Approx(-40.0));
    CHECK(t.rows[2].pct_cost_vs_ref == doctest::Approx(-36.0));
    CHECK(t.rows[2].discomfort_norm == doctest::Approx(80.0));
    CHECK(t.rows[1].discomfort_norm == doctest::Approx(100.0));
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  }

  TEST_CASE("doubling prices doubles costs and keeps the deltas") {
    auto base = small_config();
    auto doubled = base;
    for (auto& tier : doubled.tariff.tou_tiers) tier.rate *= 2;
    doubled.tariff.a_coeff *= 2;
    std::vector<ScenarioResult> r1, r2;
    for (const auto& spec : {ScenarioSpec::reference(), ScenarioSpec::cost()}) {
      r1.push_back(run_scenario(spec, base, 5));
      r2.push_back(run_scenario(spec, doubled, 5));
    }
    for (std::size_t i = 0; i < r1.size(); ++i) {
      CHECK(r2[i].total_cost == 2 * r1[i].total_cost);
      CHECK(r2[i].total_discomfort == r1[i].total_discomfort);
    }
    CHECK(compare(r1).rows[1].pct_cost_vs_ref == compare(r2).rows[1].pct_cost_vs_ref);
  }
}

TEST_SUITE("config") {
  TEST_CASE("keyed text overrides defaults") {
    auto cfg = ExperimentConfig::defaults();
    std::istringstream in(
        "# experiment\n"
        "[pricing]\n"
        "tou_tiers = [[0, 12, 0.1], [12, 24, 0.2]]\n"
        "a_coeff = 0.01\n"
        "[solver]\n"
        "population = 40\n"
        "generations = 10   # short\n"
        "w_cost = 0.7\n"
        "w_discomfort = 0.3\n"
        "players = 12\n"
        "alpha = 2\n");
    apply_config(in, cfg);
    const auto k = cfg.coefficients();
    CHECK(k.b[0] == 0.1);
    CHECK(k.b[30] == 0.2);
    CHECK(k.a[0] == 0.01);
    CHECK(cfg.game.solver.population_size == 40);
    CHECK(cfg.game.solver.generations == 10);
    CHECK(cfg.tradeoff_weights == Weights{0.7, 0.3});
    CHECK(cfg.population.players == 12);
    CHECK(cfg.discomfort.alpha == 2.0);
  }

  TEST_CASE("bad config") {
    auto cfg = ExperimentConfig::defaults();
    std::istringstream unknown("colour = 3\n");
    CHECK_THROWS_AS(apply_config(unknown, cfg), Error);
    std::istringstream malformed("population 3\n");
    CHECK_THROWS_AS(apply_config(malformed, cfg), Error);
    std::istringstream bad_value("population = [1\n");
    CHECK_THROWS_AS(apply_config(bad_value, cfg), Error);
  }
}

TEST_SUITE("io") {
  TEST_CASE("number formatting round-trips") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("summary csv round-trip") {
    const auto dir = scratch_dir("summary");
    std::vector<ComparisonRow> rows{{"Ref-sce", 1, 173.25, 0, 0, std::nan("")},
                                    {"Cost-sce", 1, 150.5, 12.0, -13.1, 100.0}};
    write_summary_csv(dir / "summary.csv", rows);
    const auto back = read_summary_csv(dir / "summary.csv");
    REQUIRE(back.size() == 2);
    CHECK(back[1].scenario == "Cost-sce");
    CHECK(back[1].total_cost == 150.5);
    CHECK(back[1].pct_cost_vs_ref == -13.1);
    CHECK(std::isnan(back[0].discomfort_norm));
    CHECK(slurp(dir / "summary.csv").rfind("scenario,seed,total_cost,total_discomfort,pct_cost_vs_ref,discomfort_norm\n", 0) == 0);
  }

  TEST_CASE("load, price and balance files") {
    const auto dir = scratch_dir("files");
    const TimeGrid g;
    write_load_csv(dir / "load.csv", std::vector<double>(48, 1.5), g);
    const auto load = slurp(dir / "load.csv");
    CHECK(load.rfind("slot,hour,kWh\n0,0,1.5\n1,0.5,1.5\n", 0) == 0);

    EnergyBalance b;
    b.demand = {2'000'000};
    b.generation = {500'000};
    b.utility = {1'500'000};
    b.surplus = {0};
    write_balance_csv(dir / "balance.csv", b);
    CHECK(slurp(dir / "balance.csv") == "slot,E_d,E_p,E_u,surplus\n0,2,0.5,1.5,0\n");
  }
}
