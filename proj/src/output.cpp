#include "stimamp/output.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace stimamp {

void OutputRecord::add_row(ordered_json row) {
  if (!row.is_object() || row.size() != columns.size()) {
    throw std::logic_error("row does not match the column list of '" + command + "'");
  }
  std::size_t i = 0;
  for (auto it = row.begin(); it != row.end(); ++it, ++i) {
    if (it.key() != columns[i]) {
      throw std::logic_error("row column '" + it.key() + "' out of order in '" + command + "'");
    }
  }
  rows.push_back(std::move(row));
}

ordered_json OutputRecord::to_json() const {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["parameters"] = parameters;
  if (!summary.empty()) doc["summary"] = summary;
  doc["columns"] = columns;
  doc["rows"] = rows;
  return doc;
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string format_csv_cell(const ordered_json& value) {
  switch (value.type()) {
    case ordered_json::value_t::null:
      return "";
    case ordered_json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
      return buf;
    }
    case ordered_json::value_t::string: {
      const auto& s = value.get_ref<const std::string&>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + "\"";
    }
    case ordered_json::value_t::array:
    case ordered_json::value_t::object: {
      std::string out = "[";
      bool first = true;
      for (const auto& v : value) {
        if (!first) out += ' ';
        out += format_csv_cell(v);
        first = false;
      }
      return out + "]";
    }
    default:
      return value.dump();
  }
}

void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    out << record.to_json().dump(2) << '\n';
    return;
  }
  out << "# schema_version=" << kSchemaVersion << '\n';
  out << "# command=" << record.command << '\n';
  for (const auto& [key, value] : record.parameters.items()) {
    out << "# parameter." << key << '=' << format_csv_cell(value) << '\n';
  }
  for (const auto& [key, value] : record.summary.items()) {
    out << "# summary." << key << '=' << format_csv_cell(value) << '\n';
  }
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    out << (i ? "," : "") << record.columns[i];
  }
  out << '\n';
  for (const auto& row : record.rows) {
    std::size_t i = 0;
    for (const auto& value : row) out << (i++ ? "," : "") << format_csv_cell(value);
    out << '\n';
  }
}

}  // namespace stimamp
