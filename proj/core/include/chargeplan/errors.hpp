#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chargeplan {

/// Offered load >= server count: the queue has no stationary distribution.
struct UnstableQueue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Some universe elements are covered by no candidate set.
struct UncoverableUniverse : std::runtime_error {
  explicit UncoverableUniverse(std::vector<std::uint32_t> missing)
      : std::runtime_error("universe contains uncoverable elements"),
        uncoverable(std::move(missing)) {}
  std::vector<std::uint32_t> uncoverable;
};

/// Total available value falls short of the demand target.
struct UnreachableDemand : std::runtime_error {
  UnreachableDemand(double target_, double available_)
      : std::runtime_error("demand target exceeds total available value"),
        target(target_),
        available(available_) {}
  double target;
  double available;
};

/// Instance exceeds the exhaustive-enumeration guard.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A period of a multi-period instance cannot satisfy its covering
/// constraints within the cumulative released budget.
struct PeriodInfeasible : std::runtime_error {
  PeriodInfeasible(std::size_t period_, const std::string& why)
      : std::runtime_error("period " + std::to_string(period_) + " infeasible: " + why),
        period(period_) {}
  std::size_t period;
};

/// Zero-variance feature column makes the fit ill-posed.
struct DegenerateData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(std::string file_, std::size_t line_, const std::string& what_)
      : std::runtime_error(file_ + ":" + std::to_string(line_) + ": " + what_),
        file(std::move(file_)),
        line(line_) {}
  std::string file;
  std::size_t line;
};

struct SchemaError : std::runtime_error {
  SchemaError(std::string file_, std::string column_)
      : std::runtime_error(file_ + ": missing required column '" + column_ + "'"),
        file(std::move(file_)),
        column(std::move(column_)) {}
  std::string file;
  std::string column;
};

}  // namespace chargeplan
