#pragma once

#include <stdexcept>
#include <string>

namespace equipop {

// Thrown when a permutation contains 2413 or 3142 and a decomposition is required.
struct not_separable : std::runtime_error {
  explicit not_separable(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by census routines before starting work that would exceed the window budget.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised by identify_partition when no candidate matches or candidates collide.
struct identification_error : std::runtime_error {
  explicit identification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace equipop
