#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kvn {

// Operands that live in different algebra contexts (ndof mismatch), or a
// precondition of an operation that the caller violated.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A product whose total degree would exceed the configured cap.
class DegreeOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Input that is outside the polynomial world (transcendental symbols,
// negative powers, division by a symbol, ...).
class UnsupportedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad grid, bad initial condition, bad scenario field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a text input; line and column are 1-based.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, int line, int column)
      : ConfigError(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A scenario field that parsed but violates a constraint.
class ValidationError : public ConfigError {
 public:
  ValidationError(const std::string& field, const std::string& constraint, const std::string& fix)
      : ConfigError("field `" + field + "`: " + constraint + (fix.empty() ? "" : "; fix: " + fix)), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A state handed to an operation that expects another representation.
class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Extraction from a state that is not a product (Schmidt rank above one).
class EntangledStateError : public std::runtime_error {
 public:
  EntangledStateError(const std::string& what, std::vector<double> spectrum)
      : std::runtime_error(what), spectrum_(std::move(spectrum)) {}
  const std::vector<double>& spectrum() const { return spectrum_; }

 private:
  std::vector<double> spectrum_;
};

}  // namespace kvn
