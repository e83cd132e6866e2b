#pragma once

#include "vdw/geometry.hpp"
#include "vdw/materials.hpp"

namespace vdw {

// Closed-form polynomials of the retardation variable x = 2 n(iu) u R / c.

// F(x) = x^4 + 4x^3 + 20x^2 + 48x + 48
double poly_F(double x);

// G(x) = (x + 2)^2
double poly_G(double x);

// P(x) = x^4 + 2x^3 + 5x^2 + 6x + 3;  identity: F(2x) = 16 P(x)
double poly_P(double x);

// Dipole-dipole interaction tensors at real frequency, k = n w / c.
// Evaluated on the lossless branch of the medium response (damping terms
// dropped). Negative response values are replaced by their absolute values
// before evaluation (negative-index media leave the tensors unchanged);
// Dyadic::abs_substituted records that this happened.

// Electric-electric tensor, symmetric:
//   (1/(eps R^3)) [ (d_ij - 3 Rh_i Rh_j)(cos kR + kR sin kR)
//                   - (d_ij - Rh_i Rh_j) k^2 R^2 cos kR ]
Dyadic dipole_tensor_ee(double omega, const Separation& sep, const ResponseModel& medium);

// Magnetic-magnetic tensor: same form with eps replaced by mu.
Dyadic dipole_tensor_mm(double omega, const Separation& sep, const ResponseModel& medium);

// Electric-magnetic tensor, antisymmetric:
//   (w^3/c^3) n^2 eps_{ijp} Rh_p [ sin kR/(kR)^2 - cos kR/(kR) ]
Dyadic dipole_tensor_em(double omega, const Separation& sep, const ResponseModel& medium);

// Same tensors from explicit scalar response values; the medium overloads
// evaluate the lossless response and delegate here.
Dyadic dipole_tensor_ee_from_response(double omega, const Separation& sep,
                                      double eps, double mu);
Dyadic dipole_tensor_mm_from_response(double omega, const Separation& sep,
                                      double eps, double mu);
Dyadic dipole_tensor_em_from_response(double omega, const Separation& sep,
                                      double eps, double mu);

// Polarization-summed vacuum correlator kernels for one plane-wave mode
// direction k_hat, with the quantization volume stripped:
//   EE: (2 pi w mu / (n g)) (d_ij - kh_i kh_j) e^{-i k.R}
//   HH: (2 pi n w / (mu g)) (d_ij - kh_i kh_j) e^{-i k.R}
//   EH: (2 pi w / g) eps_{ijl} kh_l e^{-i k.R}
// where g is the group index. Lossless evaluation; g <= 0 is a ModelError.
enum class FieldPair { ee, hh, eh };

ComplexDyadic correlator_kernel(FieldPair pair, double omega, const Vec3& k_hat,
                                const Separation& sep, const ResponseModel& medium);

}  // namespace vdw
