#pragma once

// Table container plus CSV/JSON (de)serialization used by the CLI. Both
// formats carry a schema tag and the run metadata needed to recompute every
// row from the file alone (round-trip contract).

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pairgate {

struct Table {
  int schema = 1;
  std::map<std::string, std::string> meta;  // run inputs, e.g. E, k0, kz_sign
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // cells as formatted strings

  void add_row(std::initializer_list<std::string> cells);
  double number(std::size_t row, const std::string& column) const;
  std::string cell(std::size_t row, const std::string& column) const;
  double meta_number(const std::string& key) const;
};

// Full-precision decimal formatting (round-trips doubles exactly).
std::string format_double(double v);

// CSV: "# key: value" comment header (schema first), then the column row.
void write_csv(std::ostream& os, const Table& table);
Table read_csv(std::istream& is);

// JSON: {"schema": 1, "meta": {...}, "columns": [...], "rows": [[...], ...]}.
void write_json(std::ostream& os, const Table& table);
Table read_json(std::istream& is);

}  // namespace pairgate
