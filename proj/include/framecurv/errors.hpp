#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace framecurv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error or unknown identifier in expression text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at offset " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// A numeric evaluation left the domain of an operation (log of a
/// non-positive value, division by exact zero, ...). Carries the point at
/// which evaluation was attempted, in chart-variable order.
class DomainError : public Error {
 public:
  DomainError(const std::string& message, std::vector<double> point = {})
      : Error(message), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

class SingularFrame : public Error {
 public:
  using Error::Error;
};

class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// Rejected manifold description (malformed JSON, bad field, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace framecurv
