#include "drgame/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace drgame {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cols;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) cols.push_back(field);
  return cols;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_summary_csv(const std::filesystem::path& path, std::span<const ComparisonRow> rows) {
  auto out = open_out(path);
  out << "scenario,seed,total_cost,total_discomfort,pct_cost_vs_ref,discomfort_norm\n";
  for (const auto& r : rows) {
    out << r.scenario << ',' << r.seed << ',' << format_number(r.total_cost) << ','
        << format_number(r.total_discomfort) << ',' << format_number(r.pct_cost_vs_ref) << ','
        << format_number(r.discomfort_norm) << '\n';
  }
}

std::vector<ComparisonRow> read_summary_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<ComparisonRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto cols = split_csv(line);
    if (cols.size() != 6) throw Error(ErrorCode::ParseError, "summary row needs 6 columns: " + line);
    ComparisonRow r;
    r.scenario = cols[0];
    r.seed = std::stoull(cols[1]);
    r.total_cost = parse_double(cols[2]);
    r.total_discomfort = parse_double(cols[3]);
    r.pct_cost_vs_ref = parse_double(cols[4]);
    r.discomfort_norm = parse_double(cols[5]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_comparison_csv(const std::filesystem::path& path, std::span<const ScenarioMedians> medians) {
  auto out = open_out(path);
  out << "scenario,median_total_cost,median_total_discomfort,median_pct_cost_vs_ref,median_discomfort_norm\n";
  for (const auto& m : medians) {
    out << m.scenario << ',' << format_number(m.total_cost) << ',' << format_number(m.total_discomfort)
        << ',' << format_number(m.pct_cost_vs_ref) << ',' << format_number(m.discomfort_norm) << '\n';
  }
}

void write_load_csv(const std::filesystem::path& path, std::span<const double> energy_kwh,
                    const TimeGrid& grid) {
  auto out = open_out(path);
  out << "slot,hour,kWh\n";
  for (std::size_t t = 0; t < energy_kwh.size(); ++t) {
    out << t << ',' << format_number(grid.to_hours(static_cast<int>(t))) << ','
        << format_number(energy_kwh[t]) << '\n';
  }
}

void write_loads_long_csv(const std::filesystem::path& path, std::span<const ScenarioResult> results,
                          const TimeGrid& grid) {
  auto out = open_out(path);
  out << "scenario,seed,slot,hour,kWh,price\n";
  for (const auto& r : results) {
    for (std::size_t t = 0; t < r.load.energy_kwh.size(); ++t) {
      out << r.scenario << ',' << r.seed << ',' << t << ','
          << format_number(grid.to_hours(static_cast<int>(t))) << ','
          << format_number(r.load.energy_kwh[t]) << ',' << format_number(r.price.price[t]) << '\n';
    }
  }
}

void write_price_csv(const std::filesystem::path& path, const PriceSignal& price, const TimeGrid& grid) {
  auto out = open_out(path);
  out << "slot,hour,price\n";
  for (std::size_t t = 0; t < price.price.size(); ++t) {
    out << t << ',' << format_number(grid.to_hours(static_cast<int>(t))) << ','
        << format_number(price.price[t]) << '\n';
  }
}

void write_equilibrium_report_csv(const std::filesystem::path& path, const ScenarioResult& result) {
  auto out = open_out(path);
  out << "player,kind,cost,discomfort,revenue,rounds,deviation_gain\n";
  for (const auto& p : result.players) {
    out << p.id << ',' << (p.kind == PlayerKind::prosumer ? "p-player" : "c-player") << ','
        << format_number(p.energy_cost) << ',' << format_number(p.discomfort) << ','
        << format_number(p.revenue) << ',' << result.rounds_used << ','
        << format_number(result.max_deviation_gain) << '\n';
  }
}

void write_balance_csv(const std::filesystem::path& path, const EnergyBalance& balance) {
  auto out = open_out(path);
  out << "slot,E_d,E_p,E_u,surplus\n";
  for (std::size_t t = 0; t < balance.demand.size(); ++t) {
    out << t << ',' << format_number(EnergyBalance::to_kwh(balance.demand[t])) << ','
        << format_number(EnergyBalance::to_kwh(balance.generation[t])) << ','
        << format_number(EnergyBalance::to_kwh(balance.utility[t])) << ','
        << format_number(EnergyBalance::to_kwh(balance.surplus[t])) << '\n';
  }
}

void write_front_csv(const std::filesystem::path& path, const ParetoFront& front) {
  auto out = open_out(path);
  out << "cost,discomfort";
  const std::size_t genes = front.members.empty() ? 0 : front.members.front().genes.size();
  for (std::size_t j = 0; j < genes; ++j) out << ",gene_" << j;
  out << '\n';
  for (const auto& m : front.members) {
    out << format_number(m.objectives->cost) << ',' << format_number(m.objectives->discomfort);
    for (int g : m.genes) out << ',' << g;
    out << '\n';
  }
}

}  // namespace drgame
