#include "energy_series/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "energy_series/errors.hpp"
#include "json.hpp"

namespace energy_series {

namespace {

using nlohmann::json;

std::string format_number(double value, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string text_of(const ReportCell& c, int digits) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d, digits);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return "";
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json to_json_cell(const ReportCell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

ReportCell from_json_cell(const json& j) {
  if (j.is_null()) return cell();
  if (j.is_number()) return cell(j.get<double>());
  if (j.is_string()) return cell(j.get<std::string>());
  throw Error(ErrorCode::InvalidSpec, "report cell must be null, a number or a string");
}

}  // namespace

ReportCell cell(double value) {
  if (!std::isfinite(value)) return ReportCell();
  return ReportCell(value);
}

void Report::add_row(std::vector<ReportCell> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorCode::InvalidSpec, "row has " + std::to_string(row.size()) + " cells, table has " +
                                            std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "pretty") return Format::Pretty;
  throw Error(ErrorCode::Usage, "unknown format '" + text + "'; expected csv, json or pretty");
}

void write_csv(std::ostream& out, const Report& report) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << csv_escape(report.columns[i]);
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(text_of(row[i], 17));
    out << '\n';
  }
}

void write_pretty(std::ostream& out, const Report& report) {
  if (!report.title.empty()) out << report.title << "\n\n";
  std::vector<std::vector<std::string>> text;
  text.push_back(report.columns);
  for (const auto& row : report.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) line.push_back(text_of(c, 10));
    text.push_back(std::move(line));
  }
  std::vector<std::size_t> width(report.columns.size(), 0);
  for (const auto& line : text) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (std::size_t r = 0; r < text.size(); ++r) {
    for (std::size_t i = 0; i < text[r].size(); ++i) {
      out << (i ? "  " : "") << text[r][i] << std::string(width[i] - text[r][i].size(), ' ');
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
    }
  }
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  if (!report.meta.empty()) {
    out << '\n';
    for (const auto& [key, value] : report.meta) out << key << " = " << text_of(value, 10) << '\n';
  }
}

std::string to_json(const Report& report) {
  json j;
  j["title"] = report.title;
  json meta = json::object();
  for (const auto& [key, value] : report.meta) meta[key] = to_json_cell(value);
  j["meta"] = meta;
  j["columns"] = report.columns;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json line = json::array();
    for (const auto& c : row) line.push_back(to_json_cell(c));
    rows.push_back(line);
  }
  j["rows"] = rows;
  j["notes"] = report.notes;
  j["tolerance_breach"] = report.tolerance_breach;
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, std::string("malformed report JSON: ") + e.what());
  }
  Report out;
  out.title = j.at("title").get<std::string>();
  for (const auto& [key, value] : j.at("meta").items()) out.meta[key] = from_json_cell(value);
  out.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& line : j.at("rows")) {
    std::vector<ReportCell> row;
    for (const auto& c : line) row.push_back(from_json_cell(c));
    out.add_row(std::move(row));
  }
  out.notes = j.at("notes").get<std::vector<std::string>>();
  out.tolerance_breach = j.at("tolerance_breach").get<bool>();
  return out;
}

void write(std::ostream& out, const Report& report, Format format) {
  switch (format) {
    case Format::Csv: write_csv(out, report); break;
    case Format::Json: out << to_json(report) << '\n'; break;
    case Format::Pretty: write_pretty(out, report); break;
  }
}

}  // namespace energy_series
