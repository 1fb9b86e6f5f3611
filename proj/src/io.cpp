#include "pairgate/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pairgate {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("not a number in " + what + ": '" + s + "'");
  }
}

}  // namespace

void Table::add_row(std::initializer_list<std::string> cells) {
  if (!columns.empty() && cells.size() != columns.size())
    throw std::invalid_argument("row width does not match the column count");
  rows.emplace_back(cells);
}

std::string Table::cell(std::size_t row, const std::string& column) const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == column) return rows.at(row).at(c);
  throw std::out_of_range("no column named '" + column + "'");
}

double Table::number(std::size_t row, const std::string& column) const {
  return parse_number(cell(row, column), "column '" + column + "'");
}

double Table::meta_number(const std::string& key) const {
  const auto it = meta.find(key);
  if (it == meta.end()) throw std::out_of_range("no meta key '" + key + "'");
  return parse_number(it->second, "meta '" + key + "'");
}

std::string format_double(double v) {
  // shortest decimal form that round-trips the bits
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  os << "# schema: " << table.schema << "\n";
  for (const auto& [key, value] : table.meta)
    os << "# " << key << ": " << value << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "," : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << row[c];
    os << "\n";
  }
}

Table read_csv(std::istream& is) {
  Table table;
  table.schema = 0;
  std::string line;
  bool have_columns = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("malformed comment line: '" + line + "'");
      const std::string key = trim(body.substr(0, colon));
      const std::string value = trim(body.substr(colon + 1));
      if (key == "schema")
        table.schema = static_cast<int>(parse_number(value, "schema"));
      else
        table.meta[key] = value;
      continue;
    }
    if (!have_columns) {
      table.columns = split(line, ',');
      have_columns = true;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != table.columns.size())
      throw std::runtime_error("row width does not match the header: '" +
                               line + "'");
    table.rows.push_back(std::move(cells));
  }
  if (table.schema == 0)
    throw std::runtime_error("missing '# schema:' header");
  if (!have_columns) throw std::runtime_error("missing column header row");
  return table;
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::json j;
  j["schema"] = table.schema;
  j["meta"] = table.meta;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  os << j.dump(2) << "\n";
}

Table read_json(std::istream& is) {
  try {
    const nlohmann::json j = nlohmann::json::parse(is);
    Table table;
    table.schema = j.at("schema").get<int>();
    table.meta = j.at("meta").get<std::map<std::string, std::string>>();
    table.columns = j.at("columns").get<std::vector<std::string>>();
    table.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    for (const auto& row : table.rows)
      if (row.size() != table.columns.size())
        throw std::runtime_error("row width does not match the column count");
    return table;
  } catch (const nlohmann::json::exception& err) {
    throw std::runtime_error(std::string("malformed table JSON: ") +
                             err.what());
  }
}

}  // namespace pairgate
