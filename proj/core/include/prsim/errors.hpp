#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prsim {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds what an operation is built for (e.g. 2^n enumeration).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An identity that is guaranteed by construction failed to hold numerically.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Iteration cap reached before the requested tolerance; carries the last iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, std::vector<double> last_iterate,
                   std::size_t iterations)
      : Error(msg + " (after " + std::to_string(iterations) + " iterations)"),
        last_iterate_(std::move(last_iterate)),
        iterations_(iterations) {}

  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::vector<double> last_iterate_;
  std::size_t iterations_;
};

}  // namespace prsim
