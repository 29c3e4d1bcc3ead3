#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trihelix {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Overlap correction produced a cell below zero: the retrieval counts are
/// inconsistent as sets and must not be clamped.
class NegativeCellError : public Error {
 public:
  using Error::Error;
};

/// A probability vector failed validation (negative mass or sum too far
/// from one).
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

/// The probability universe has zero total mass.
class EmptyUniverseError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries the 1-based line number and, when known,
/// the column name.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::string column = "")
      : Error(locate(message, line, column)),
        line_(line),
        column_(std::move(column)) {}

  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  static std::string locate(const std::string& message, std::size_t line,
                            const std::string& column) {
    std::string out = "line " + std::to_string(line);
    if (!column.empty()) out += ", column '" + column + "'";
    out += ": " + message;
    return out;
  }

  std::size_t line_;
  std::string column_;
};

/// Two records share the same (country, scenario, window) key.
class DuplicateKeyError : public Error {
 public:
  using Error::Error;
};

/// A record that must carry a T value does not.
class MissingValueError : public Error {
 public:
  using Error::Error;
};

/// Two series have no window in common.
class NoOverlapError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a payload kind the record does not carry
/// (e.g. bilateral decomposition on t-only data).
class PayloadUnavailableError : public Error {
 public:
  using Error::Error;
};

class EmptyCountryError : public Error {
 public:
  using Error::Error;
};

class InvalidYearRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace trihelix
