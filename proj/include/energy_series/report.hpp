#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace energy_series {

/// One table cell: empty (written as null / blank), a number, or text.
/// Non-finite numbers are stored as empty.
using ReportCell = std::variant<std::monostate, double, std::string>;

ReportCell cell(double value);
inline ReportCell cell(std::string text) { return ReportCell(std::move(text)); }
inline ReportCell cell() { return ReportCell(); }

struct Report {
  std::string title;
  /// Flat key/value metadata: grid settings, tolerances, build info.
  std::map<std::string, ReportCell> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<ReportCell>> rows;
  std::vector<std::string> notes;
  /// Set by reproduction targets when a cell exceeds its tolerance.
  bool tolerance_breach = false;

  void add_row(std::vector<ReportCell> row);

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { Csv, Json, Pretty };

Format parse_format(const std::string& text);

void write_csv(std::ostream& out, const Report& report);
void write_pretty(std::ostream& out, const Report& report);
/// 17 significant digits, so reading the text back gives identical doubles.
std::string to_json(const Report& report);
Report report_from_json(const std::string& text);

void write(std::ostream& out, const Report& report, Format format);

}  // namespace energy_series
