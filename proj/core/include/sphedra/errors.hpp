#pragma once

#include <stdexcept>
#include <string>

namespace sphedra {

// Geometric input that cannot be processed: coincident, collinear or
// coplanar point sets, zero vectors, and similar.
class DegenerateInput : public std::runtime_error {
 public:
  explicit DegenerateInput(const std::string& what)
      : std::runtime_error(what) {}
};

// Vertex/edge/facet counts that violate Euler's relation or a bound's
// preconditions.
class InvalidCounts : public std::invalid_argument {
 public:
  explicit InvalidCounts(const std::string& what)
      : std::invalid_argument(what) {}
};

// Scalar argument outside a formula's domain of validity.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sphedra
