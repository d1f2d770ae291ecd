#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Argument outside a sieve table's covered range.
class range_error : public std::out_of_range {
 public:
  explicit range_error(const std::string& msg) : std::out_of_range(msg) {}
};

// Table build would exceed the configured memory budget.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dirichlet inverse does not exist: f(1) = 0.
class singular_error : public std::domain_error {
 public:
  explicit singular_error(const std::string& msg) : std::domain_error(msg) {}
};

// Gamma evaluated at a nonpositive integer.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace zetalab
