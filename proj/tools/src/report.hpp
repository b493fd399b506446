#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indel::cli {

enum class Format { kCsv, kJson, kPretty };

std::optional<Format> format_from_name(std::string_view name);

// A rectangular result. Every cell is already a string: integers as full
// decimal digits, reals with six fixed decimals, inapplicable cells as "n/a".
struct Report {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
  void add_row(std::vector<std::string> row);
};

// CSV: header plus rows, no meta. JSON: {"meta": {...}, "rows": [{column: cell}]}.
// Pretty: meta lines, then right-aligned columns.
void write_report(std::ostream& out, const Report& report, Format format);

std::string fixed6(double value);

}  // namespace indel::cli
