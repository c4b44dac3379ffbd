#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkpred {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or configuration value does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A snapshot index or node id lies outside the valid range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed input record. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation would produce an empty result (e.g. a degree filter removing every node).
class EmptyResult : public Error {
 public:
  using Error::Error;
};

/// A ranking metric is undefined for the given labels (no positives, no negatives, ...).
class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

}  // namespace linkpred
