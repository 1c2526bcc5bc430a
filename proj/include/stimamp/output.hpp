#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace stimamp {

inline constexpr std::string_view kSchemaVersion = "1.0";

using ordered_json = nlohmann::ordered_json;

/// One machine-readable command result. Rows are flat objects whose keys
/// follow `columns`; `summary` holds per-document scalars and may be empty.
struct OutputRecord {
  std::string command;
  ordered_json parameters = ordered_json::object();
  ordered_json summary = ordered_json::object();
  std::vector<std::string> columns;
  std::vector<ordered_json> rows;

  /// Appends a row; throws std::logic_error if its keys differ from `columns`.
  void add_row(ordered_json row);

  ordered_json to_json() const;
};

enum class OutputFormat { Json, Csv };

OutputFormat parse_format(std::string_view text);

/// Doubles as %.17g, integers verbatim, null as empty, strings quoted when
/// they contain a comma, quote or newline.
std::string format_csv_cell(const ordered_json& value);

/// JSON: one pretty-printed document. CSV: `# key=value` lines for
/// schema_version, command, parameters and summary, then header and rows.
void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out);

}  // namespace stimamp
