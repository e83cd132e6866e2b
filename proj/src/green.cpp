#include "vdw/green.hpp"

#include <cmath>

namespace vdw {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_imag_frequency(double u) {
  if (!(u > 0.0) || !std::isfinite(u))
    throw DomainError("green: imaginary-axis frequency must be finite and > 0");
}

}  // namespace

Mat3 green_iu_matrix(double u, const Separation& sep, const ResponseModel& medium) {
  require_imag_frequency(u);
  const double mu = medium.mu_iu(u);
  const double n = medium.n_iu(u);
  const double q = n * u;  // k = iq on the imaginary axis
  const double r = sep.distance;
  const double damp = std::exp(-q * r) / r;
  const double longitudinal = 1.0 / (r * r) + q / r;
  const double pref = mu / (4.0 * kPi * q * q);

  Mat3 g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double rr = sep.direction[i] * sep.direction[j];
      g[i][j] = pref * damp *
                (q * q * (kronecker(i, j) - rr) +
                 (kronecker(i, j) - 3.0 * rr) * longitudinal);
    }
  return g;
}

Mat3 curl_green_iu_matrix(double u, const Separation& sep,
                          const ResponseModel& medium, CurlSide side) {
  require_imag_frequency(u);
  const double mu = medium.mu_iu(u);
  const double n = medium.n_iu(u);
  const double q = n * u;
  const double r = sep.distance;
  // ik - 1/R at k = iq
  const double radial = -(q + 1.0 / r);
  const double scale = mu * radial * std::exp(-q * r) / (4.0 * kPi * r);
  const double sign = (side == CurlSide::at_a) ? 1.0 : -1.0;

  Mat3 g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int l = 0; l < 3; ++l) s += levi_civita(i, j, l) * sep.direction[l];
      g[i][j] = sign * scale * s;
    }
  return g;
}

GreenEvaluation dyadic_green(FrequencyAxis axis, double freq,
                             const Separation& sep, const ResponseModel& medium) {
  GreenEvaluation out(axis, freq, sep);
  if (axis == FrequencyAxis::imaginary_axis) {
    const Mat3 g = green_iu_matrix(freq, sep, medium);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.g[i][j] = g[i][j];
    return out;
  }

  const ComplexResponse resp = medium.response_complex(freq);
  const std::complex<double> k = resp.n * freq;
  if (std::abs(k) == 0.0)
    throw SingularityError("dyadic_green: k = 0 (static pole)");
  const double r = sep.distance;
  const std::complex<double> ikr(0.0, 1.0);
  const std::complex<double> phase = std::exp(ikr * k * r) / r;
  const std::complex<double> longitudinal = 1.0 / (r * r) - ikr * k / r;
  const std::complex<double> pref = resp.mu / (4.0 * kPi * k * k);

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double rr = sep.direction[i] * sep.direction[j];
      out.g[i][j] = pref * phase *
                    (k * k * (kronecker(i, j) - rr) -
                     (kronecker(i, j) - 3.0 * rr) * longitudinal);
    }
  return out;
}

GreenEvaluation curl_green(FrequencyAxis axis, double freq, const Separation& sep,
                           const ResponseModel& medium, CurlSide side) {
  GreenEvaluation out(axis, freq, sep);
  if (axis == FrequencyAxis::imaginary_axis) {
    const Mat3 g = curl_green_iu_matrix(freq, sep, medium, side);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.g[i][j] = g[i][j];
    return out;
  }

  const ComplexResponse resp = medium.response_complex(freq);
  const std::complex<double> k = resp.n * freq;
  if (std::abs(k) == 0.0)
    throw SingularityError("curl_green: k = 0 (static pole)");
  const double r = sep.distance;
  const std::complex<double> ikr(0.0, 1.0);
  const std::complex<double> radial = ikr * k - 1.0 / r;
  const std::complex<double> scale =
      resp.mu * radial * std::exp(ikr * k * r) / (4.0 * kPi * r);
  const double sign = (side == CurlSide::at_a) ? 1.0 : -1.0;

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int l = 0; l < 3; ++l) s += levi_civita(i, j, l) * sep.direction[l];
      out.g[i][j] = sign * scale * s;
    }
  return out;
}

double trace_GG(double u, const Separation& sep, const ResponseModel& medium) {
  const Mat3 g = green_iu_matrix(u, sep, medium);
  return trace_product(g, g);
}

double trace_curlG_curlG(double u, const Separation& sep,
                         const ResponseModel& medium) {
  const Mat3 ca = curl_green_iu_matrix(u, sep, medium, CurlSide::at_a);
  const Mat3 cb = curl_green_iu_matrix(u, sep, medium, CurlSide::at_b);
  return trace_product(ca, cb);
}

}  // namespace vdw
