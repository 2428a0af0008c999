#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tripick::output {

enum class Format { Csv, Json };

inline Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv or json)");
}

/// Strings carry exact big integers and rationals as well as labels.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name = "rows";
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
      throw std::logic_error("Table: row width does not match the header");
    }
    rows.push_back(std::move(row));
  }
};

struct Document {
  std::string command;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<Table> tables;
};

/// 17 significant digits, enough to round-trip any double.
inline std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

inline std::string to_csv_field(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

/*
 * One header row plus data rows per table, comma separated, '\n' endings.
 * Multiple tables are separated by a blank line.
 */
inline void write_csv(std::ostream& out, const Document& doc) {
  bool first = true;
  for (const auto& table : doc.tables) {
    if (!first) out << '\n';
    first = false;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << to_csv_field(row[i]);
      }
      out << '\n';
    }
  }
}

inline nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

/// {"meta": {...}, "<table name>": [ {column: value, ...}, ... ], ...}
inline void write_json(std::ostream& out, const Document& doc) {
  nlohmann::ordered_json root;
  root["meta"] = {{"command", doc.command}, {"seed", doc.seed}, {"version", doc.version}};
  for (const auto& table : doc.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json object;
      for (std::size_t i = 0; i < row.size(); ++i) {
        object[table.columns[i]] = to_json(row[i]);
      }
      rows.push_back(std::move(object));
    }
    root[table.name] = std::move(rows);
  }
  out << root.dump(2) << '\n';
}

inline void write(std::ostream& out, const Document& doc, Format format) {
  if (format == Format::Csv) {
    write_csv(out, doc);
  } else {
    write_json(out, doc);
  }
}

}  // namespace tripick::output
