#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

// Precondition violations on inputs (non-finite frequency, R <= 0, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation at a pole or other removable breakdown of a closed form.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The material model makes the requested quantity meaningless at this point
// (no propagating mode, non-positive group index, ...).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed JSON model specification. `field` names the offending entry.
struct SpecError : std::runtime_error {
  std::string field;
  SpecError(const std::string& field_path, const std::string& what)
      : std::runtime_error(field_path + ": " + what), field(field_path) {}
};

// The integrand returned a non-finite value.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vdw
