#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indel::cli {

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& out, const Report& report) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    out << '\n';
  };
  line(report.columns);
  for (const auto& row : report.rows) line(row);
}

void write_json(std::ostream& out, const Report& report) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.meta) doc["meta"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json record;
    for (std::size_t i = 0; i < row.size(); ++i) record[report.columns[i]] = row[i];
    doc["rows"].push_back(std::move(record));
  }
  out << doc.dump(2) << '\n';
}

void write_pretty(std::ostream& out, const Report& report) {
  for (const auto& [key, value] : report.meta) out << "# " << key << ": " << value << '\n';
  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = report.columns[i].size();
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out << text << '\n';
  };
  line(report.columns);
  for (const auto& row : report.rows) line(row);
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "pretty") return Format::kPretty;
  return std::nullopt;
}

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("Report::add_row: row width does not match the header");
  rows.push_back(std::move(row));
}

void write_report(std::ostream& out, const Report& report, Format format) {
  switch (format) {
    case Format::kCsv:
      write_csv(out, report);
      break;
    case Format::kJson:
      write_json(out, report);
      break;
    case Format::kPretty:
      write_pretty(out, report);
      break;
  }
}

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  std::string text = buffer;
  if (text == "-0.000000") text = "0.000000";
  return text;
}

}  // namespace indel::cli
