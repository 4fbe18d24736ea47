#include "drgame/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace drgame {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(trim(field));
  if (!line.empty() && line.back() == delim) out.emplace_back();
  return out;
}

double parse_number(const std::string& text, std::size_t line_no, std::string_view column) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad " +
                                           std::string(column) + " '" + text + "'");
  }
  return value;
}

Task make_task(std::string id, double power_kw, double st_h, double ft_h, double dur_h,
               const TimeGrid& grid) {
  Task t;
  t.id = std::move(id);
  t.power_kw = power_kw;
  t.earliest_start_slot = grid.to_slot(st_h) % grid.slots_per_day;
  t.latest_finish_slot = grid.to_slot(ft_h);
  t.duration_slots = grid.to_slot(dur_h);
  // Placeholder preferred window: the whole admitted window.
  t.preferred_start_slot = t.earliest_start_slot;
  t.preferred_finish_slot = t.latest_finish_slot;
  return t;
}

}  // namespace

Catalog parse_catalog(std::istream& in, const TimeGrid& grid) {
  Catalog catalog;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const char delim = line.find(';') != std::string::npos    ? ';'
                       : line.find('\t') != std::string::npos ? '\t'
                                                              : ',';
    auto cols = split(line, delim);
    if (!cols.empty() && (cols[0] == "id" || cols[0] == "ID")) continue;
    if (cols.size() < 5 || cols.size() > 7) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 5 to 7 columns");
    }
    CatalogEntry entry;
    try {
      entry.task = make_task(cols[0], parse_number(cols[1], line_no, "power_kw"),
                             parse_number(cols[2], line_no, "earliest_start_h"),
                             parse_number(cols[3], line_no, "latest_finish_h"),
                             parse_number(cols[4], line_no, "duration_h"), grid);
      const bool pref_start = cols.size() > 5 && !cols[5].empty();
      const bool pref_finish = cols.size() > 6 && !cols[6].empty();
      if (pref_start != pref_finish) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": preferred window needs both ends");
      }
      if (pref_start) {
        entry.task.preferred_start_slot =
            grid.to_slot(parse_number(cols[5], line_no, "preferred_start_h")) % grid.slots_per_day;
        entry.task.preferred_finish_slot =
            grid.to_slot(parse_number(cols[6], line_no, "preferred_finish_h"));
        entry.has_preferred = true;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

Catalog load_catalog(const std::filesystem::path& path, const TimeGrid& grid) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open catalog " + path.string());
  return parse_catalog(in, grid);
}

Catalog table1_catalog(const TimeGrid& grid) {
  struct Row {
    const char* id;
    double power, st, ft, dur;
  };
  static constexpr Row rows[] = {
      {"Washing machine", 1.0, 6, 24, 2},   {"Laptop", 0.1, 18, 24, 6},
      {"Desktop", 0.3, 18, 24, 3},          {"Air conditionner", 1.5, 10, 19, 1},
      {"Dish Washer", 1.0, 7, 19, 3},       {"Fridge", 0.3, 0, 24, 24},
      {"Electrical Car", 3.5, 18, 8, 3},    {"Boiler", 0.8, 15, 22, 2},
      {"Iron", 1.2, 10, 22, 1},             {"Cooker Microwave", 1.7, 6, 9, 1},
      {"Spin Dryer", 2.9, 13, 18, 1},       {"Television", 0.6, 19, 24, 3},
      {"Cooker Oven", 5.0, 18, 19, 0.5},    {"Cooker Hob", 3.0, 8, 9, 0.5},
  };
  Catalog c;
  for (const auto& r : rows) {
    c.entries.push_back({make_task(r.id, r.power, r.st, r.ft, r.dur, grid), false});
  }
  return c;
}

std::vector<TaskValidation> validate_catalog(const Catalog& catalog, const TimeGrid& grid) {
  std::vector<TaskValidation> failures;
  for (const auto& entry : catalog.entries) {
    Task t = entry.task;
    if (!entry.has_preferred) {
      t.preferred_start_slot = t.earliest_start_slot;
      t.preferred_finish_slot = t.latest_finish_slot;
    }
    if (auto v = validate_task(t, grid); !v.ok()) failures.push_back(std::move(v));
  }
  return failures;
}

Task with_random_preferred_window(Task task, const TimeGrid& grid, std::mt19937_64& rng) {
  const int n = grid.slots_per_day;
  const int window = admitted_length(task, grid);
  const int length = std::min(task.duration_slots + 2, window);
  std::uniform_int_distribution<int> pick(0, std::max(0, window - length));
  const int offset = pick(rng);
  const int begin = task.earliest_start_slot + offset;
  int end = begin + length;
  if (end > n) end -= n;
  task.preferred_start_slot = begin % n;
  task.preferred_finish_slot = end;
  return task;
}

}  // namespace drgame
