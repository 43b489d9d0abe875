#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infoproj {

/// Bad argument: wrong shape, non-finite entry, violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the attainable range of a function (e.g. kappa_inverse).
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A weight 1/(rho + p^2) would divide by zero.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, std::size_t row)
      : std::runtime_error(what + " (row " + std::to_string(row) + ")"), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace infoproj
