#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ybsys {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
  using std::domain_error::domain_error;
};

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
  using std::domain_error::domain_error;
};

struct UnboundVariable : std::invalid_argument {
  explicit UnboundVariable(const std::string& name)
      : std::invalid_argument("unbound variable '" + name + "'"), variable(name) {}
  std::string variable;
};

struct NotInKernel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration would visit more coordinate points than allowed.
struct BoundExceeded : std::runtime_error {
  BoundExceeded(std::uint64_t required_points, std::uint64_t bound_points)
      : std::runtime_error("enumeration needs " + std::to_string(required_points) +
                           " points, bound is " + std::to_string(bound_points)),
        required(required_points),
        bound(bound_points) {}
  std::uint64_t required;
  std::uint64_t bound;
};

}  // namespace ybsys
