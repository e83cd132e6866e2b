#pragma once

#include <string>

#include "vdw/energies.hpp"
#include "vdw/errors.hpp"
#include "vdw/materials.hpp"

namespace vdw {

// JSON model specifications.
//
// Material:
//   {}                                                        vacuum
//   {"eps": {"terms": [{"wp": f, "w0": f, "gamma": f}, ...]},
//    "mu":  {"terms": [...]}}                                 Lorentz sums
//   {"two_level_dielectric": {"C": f}}                        eps = 1 + C/(y^2+1)
//
// Polarizability:
//   {"static": f}
//   {"two_level": {"w0": f, "alpha0": f}}
//   {"terms": [{"w0": f, "alpha0": f}, ...]}
//
// Particle (a pair of polarizability models, both optional):
//   {"alpha_e": <polarizability>, "alpha_m": <polarizability>}
//
// Unknown keys are rejected; SpecError::field names the offending entry.

ResponseModel parse_response_model(const std::string& json_text);
PolarizabilityModel parse_polarizability_model(const std::string& json_text);
Particle parse_particle(const std::string& json_text);

}  // namespace vdw
