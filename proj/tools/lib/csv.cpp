#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "chargeplan/errors.hpp"

namespace chargeplan::cli {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    const auto begin = cell.find_first_not_of(" \t\r");
    const auto end = cell.find_last_not_of(" \t\r");
    cells.push_back(begin == std::string::npos ? std::string{}
                                               : cell.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw SchemaError(path, name);
}

std::optional<std::size_t> CsvTable::find_column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  return std::nullopt;
}

double CsvTable::number(std::size_t row, std::size_t col) const {
  const std::string& cell = rows[row][col];
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw ParseError(path, row + 2,  // +1 header, +1 one-based
                     "cell '" + cell + "' in column '" + header[col] +
                         "' is not numeric");
  }
}

const std::string& CsvTable::text(std::size_t row, std::size_t col) const {
  return rows[row][col];
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");

  CsvTable table;
  table.path = path.string();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells = split_line(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size())
        throw ParseError(table.path, line_no,
                         "expected " + std::to_string(table.header.size()) +
                             " fields, found " + std::to_string(cells.size()));
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw ParseError(table.path, 0, "file has no header row");
  return table;
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(path) {
  if (!out_) throw ParseError(path.string(), 0, "cannot open file for writing");
}

void CsvWriter::row(std::span<const std::string> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::string> cells) {
  row(std::span<const std::string>(cells.begin(), cells.size()));
}

std::string format_number(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

long long to_cents(double money) {
  return std::llround(money * 100.0);
}

}  // namespace chargeplan::cli
