#pragma once

#include <stdexcept>
#include <string>

namespace p3asym {

/// Invalid equation parameters (alpha*delta == 0, zero scaling factors, ...).
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A branch override that does not cube to -delta/alpha, or a bad branch index.
struct branch_error : domain_error {
  explicit branch_error(const std::string& msg) : domain_error(msg) {}
};

/// An operation that requires an exact table received a numeric one (or vice versa).
struct mode_error : std::logic_error {
  explicit mode_error(const std::string& msg) : std::logic_error(msg) {}
};

/// An index outside the range for which the statement being checked is defined.
struct range_error : std::out_of_range {
  explicit range_error(const std::string& msg) : std::out_of_range(msg) {}
};

/// Parameters outside the class an operation is defined for.
struct classification_error : domain_error {
  explicit classification_error(const std::string& msg) : domain_error(msg) {}
};

/// A LaplaceSpec whose integration endpoint leaves the Borel disk.
struct spec_error : std::invalid_argument {
  explicit spec_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Evaluation too close to a zero of the summed function.
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace p3asym
