#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chargeplan::cli {

/// In-memory CSV with a header row. Values are unquoted UTF-8 fields.
struct CsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a required column; throws SchemaError naming it.
  std::size_t column(const std::string& name) const;
  std::optional<std::size_t> find_column(const std::string& name) const;

  /// Numeric cell access; throws ParseError with the 1-based file line.
  double number(std::size_t row, std::size_t col) const;
  const std::string& text(std::size_t row, std::size_t col) const;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Streaming writer with deterministic formatting.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);
  void row(std::span<const std::string> cells);
  void row(std::initializer_list<std::string> cells);

 private:
  std::ofstream out_;
};

/// Fixed-point decimal rendering (no locale, no exponent).
std::string format_number(double value, int decimals = 6);

/// Money as integer cents, the artifact-file convention.
long long to_cents(double money);

}  // namespace chargeplan::cli
