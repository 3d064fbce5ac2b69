#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace dyadic {

/// Base class for runtime failures raised by the library (I/O, parsing,
/// numerical breakdown). Precondition violations use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number when known (0 if not).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A pipeline stage (zero detection, classification, reconstruction, division)
/// could not produce a result.
class IdentificationError : public Error {
 public:
  IdentificationError(std::string stage, std::string detail)
      : Error(stage + ": " + detail), stage_(std::move(stage)), detail_(std::move(detail)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string stage_;
  std::string detail_;
};

}  // namespace dyadic
