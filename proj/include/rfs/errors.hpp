#pragma once

#include <stdexcept>
#include <string>

namespace rfs {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConditioningError : std::runtime_error {
  double condition_estimate;
  explicit ConditioningError(const std::string& what, double cond)
      : std::runtime_error(what), condition_estimate(cond) {}
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Touchstone / config / model-file parse failure; line is 1-based, 0 if n/a.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& what, int line_no)
      : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A design point or derived physical quantity violates an oracle's domain.
struct OracleDomainError : std::invalid_argument {
  std::string axis;
  OracleDomainError(const std::string& what, std::string axis_name)
      : std::invalid_argument(what), axis(std::move(axis_name)) {}
};

}  // namespace rfs
