#pragma once

#include "vdw/geometry.hpp"
#include "vdw/materials.hpp"

namespace vdw {

// Homogeneous-medium dyadic Green function
//   G_ij = mu/(4 pi k^2) [ k^2 (d_ij - Rh_i Rh_j)
//                          - (d_ij - 3 Rh_i Rh_j)(1/R^2 - ik/R) ] e^{ikR}/R
// with k = n(w) w / c. On the real axis the complex (absorbing) response is
// used, Im n >= 0 branch. On the imaginary axis (w = iu) the response is
// real and every entry of G is real.

enum class FrequencyAxis { real_axis, imaginary_axis };

// Which position argument of G(r_A, r_B) a curl differentiates.
enum class CurlSide { at_a, at_b };

struct GreenEvaluation {
  FrequencyAxis axis;
  double frequency;  // w for real_axis, u for imaginary_axis
  Separation sep;
  CMat3 g{};

  GreenEvaluation(FrequencyAxis ax, double freq, const Separation& s)
      : axis(ax), frequency(freq), sep(s) {}
};

GreenEvaluation dyadic_green(FrequencyAxis axis, double freq,
                             const Separation& sep, const ResponseModel& medium);

// Analytic curl of G. Only the delta-function part of G survives the curl:
//   (curl_A G)_ij =  mu eps_{ijl} Rh_l (ik - 1/R) e^{ikR} / (4 pi R)
//   (curl_B G)_ij = -(curl_A G)_ij
// with Rh the unit vector from A to B.
GreenEvaluation curl_green(FrequencyAxis axis, double freq, const Separation& sep,
                           const ResponseModel& medium, CurlSide side);

// Real 3x3 matrices on the imaginary axis; the complex wrappers above and
// the traces below are built from these.
Mat3 green_iu_matrix(double u, const Separation& sep, const ResponseModel& medium);
Mat3 curl_green_iu_matrix(double u, const Separation& sep,
                          const ResponseModel& medium, CurlSide side);

// Tr[G(iu).G(iu)] = sum_ij G_ij G_ji. Satisfies the closed form
//   mu^2(iu) F(x) e^{-x} / (8 pi^2 R^2 x^4),   x = 2 n(iu) u R / c.
double trace_GG(double u, const Separation& sep, const ResponseModel& medium);

// Tr[(curl_A G)(iu).(curl_B G)(iu)] = sum_ij (curl_A G)_ij (curl_B G)_ji.
// Satisfies the closed form  + mu^2(iu) G(x) e^{-x} / (32 pi^2 R^4).
double trace_curlG_curlG(double u, const Separation& sep,
                         const ResponseModel& medium);

// Ratio of the calibrated field normalization of the energy integrals to the
// delta-source normalization of G above: identical for the electric,
// magnetic, and mixed terms. Measured once from the trace closed forms,
// W = green_path_calibration() * (spectral integral over raw traces).
constexpr double green_path_calibration() {
  return 16.0 * 3.14159265358979323846 * 3.14159265358979323846;
}

}  // namespace vdw
