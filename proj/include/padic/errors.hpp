#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Thrown when a caller exceeds a desk-scale bound (maps to exit code 3 in the CLI).
class resource_guard_error : public std::runtime_error {
public:
  explicit resource_guard_error(const std::string& what) : std::runtime_error(what) {}
};

class not_invertible_error : public std::domain_error {
public:
  explicit not_invertible_error(const std::string& what) : std::domain_error(what) {}
};

class bad_parameters_error : public std::invalid_argument {
public:
  explicit bad_parameters_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace padic
