#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <vector>

#include "drgame/domain.hpp"

namespace drgame {

/// A catalog row. Rows may omit the preferred window; it is then drawn per
/// player when a population is generated.
struct CatalogEntry {
  Task task;
  bool has_preferred = false;
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  [[nodiscard]] bool empty() const { return entries.empty(); }
  [[nodiscard]] std::size_t size() const { return entries.size(); }
};

/// Parses `id, power_kw, earliest_start_h, latest_finish_h, duration_h,
/// preferred_start_h, preferred_finish_h`. Accepts ',', ';' or tab as the
/// delimiter, skips a header row starting with "id" and '#' comment lines.
/// The last two columns may be empty or absent.
Catalog parse_catalog(std::istream& in, const TimeGrid& grid);
Catalog load_catalog(const std::filesystem::path& path, const TimeGrid& grid);

/// The fourteen household appliances of the reference task table, without
/// preferred windows.
Catalog table1_catalog(const TimeGrid& grid);

/// One validation result per failing row (empty when the catalog is valid).
/// Rows without a preferred window are checked against the admitted window only.
std::vector<TaskValidation> validate_catalog(const Catalog& catalog, const TimeGrid& grid);

/// Places a preferred window of length min(duration + 2, admitted length)
/// uniformly at random inside the admitted window.
Task with_random_preferred_window(Task task, const TimeGrid& grid, std::mt19937_64& rng);

}  // namespace drgame
