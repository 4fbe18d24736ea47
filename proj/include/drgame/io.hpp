#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "drgame/scenarios.hpp"

namespace drgame {

/// Shortest round-trip decimal; "nan" / "inf" for non-finite values.
std::string format_number(double value);

void write_summary_csv(const std::filesystem::path& path, std::span<const ComparisonRow> rows);
std::vector<ComparisonRow> read_summary_csv(const std::filesystem::path& path);
void write_comparison_csv(const std::filesystem::path& path, std::span<const ScenarioMedians> medians);

void write_load_csv(const std::filesystem::path& path, std::span<const double> energy_kwh,
                    const TimeGrid& grid);
void write_loads_long_csv(const std::filesystem::path& path, std::span<const ScenarioResult> results,
                          const TimeGrid& grid);
void write_price_csv(const std::filesystem::path& path, const PriceSignal& price, const TimeGrid& grid);
void write_equilibrium_report_csv(const std::filesystem::path& path, const ScenarioResult& result);
void write_balance_csv(const std::filesystem::path& path, const EnergyBalance& balance);
void write_front_csv(const std::filesystem::path& path, const ParetoFront& front);

}  // namespace drgame
