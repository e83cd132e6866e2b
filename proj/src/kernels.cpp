#include "vdw/kernels.hpp"

#include <cmath>

namespace vdw {

double poly_F(double x) { return (((x + 4.0) * x + 20.0) * x + 48.0) * x + 48.0; }

double poly_G(double x) { return (x + 2.0) * (x + 2.0); }

double poly_P(double x) { return (((x + 2.0) * x + 5.0) * x + 6.0) * x + 3.0; }

namespace {

void require_frequency(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw DomainError("dipole tensor: frequency must be finite and > 0");
}

struct AbsResponse {
  double eps;
  double mu;
  double n;
  bool substituted;
};

AbsResponse absolute_response(double eps, double mu) {
  if (!std::isfinite(eps) || !std::isfinite(mu))
    throw SingularityError("dipole tensor: response diverges at this frequency");
  AbsResponse r;
  r.substituted = (eps < 0.0) || (mu < 0.0);
  r.eps = std::abs(eps);
  r.mu = std::abs(mu);
  if (!(r.eps > 0.0) || !(r.mu > 0.0))
    throw ModelError("dipole tensor: response vanishes at this frequency");
  r.n = std::sqrt(r.eps * r.mu);
  return r;
}

// Shared symmetric form of the ee/mm tensors; `inv_scalar` is eps or mu.
Dyadic symmetric_dipole_tensor(double omega, const Separation& sep,
                               const AbsResponse& resp, double inv_scalar) {
  const double r = sep.distance;
  const double kr = resp.n * omega * r;
  const double long_part = std::cos(kr) + kr * std::sin(kr);
  const double trans_part = kr * kr * std::cos(kr);
  const double pref = 1.0 / (inv_scalar * r * r * r);

  Dyadic out(sep);
  out.abs_substituted = resp.substituted;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double rr = sep.direction[i] * sep.direction[j];
      out.m[i][j] = pref * ((kronecker(i, j) - 3.0 * rr) * long_part -
                            (kronecker(i, j) - rr) * trans_part);
    }
  return out;
}

}  // namespace

Dyadic dipole_tensor_ee_from_response(double omega, const Separation& sep,
                                      double eps, double mu) {
  require_frequency(omega);
  const AbsResponse resp = absolute_response(eps, mu);
  return symmetric_dipole_tensor(omega, sep, resp, resp.eps);
}

Dyadic dipole_tensor_mm_from_response(double omega, const Separation& sep,
                                      double eps, double mu) {
  require_frequency(omega);
  const AbsResponse resp = absolute_response(eps, mu);
  return symmetric_dipole_tensor(omega, sep, resp, resp.mu);
}

Dyadic dipole_tensor_em_from_response(double omega, const Separation& sep,
                                      double eps, double mu) {
  require_frequency(omega);
  const AbsResponse resp = absolute_response(eps, mu);
  const double kr = resp.n * omega * sep.distance;
  const double radial = std::sin(kr) / (kr * kr) - std::cos(kr) / kr;
  const double pref = omega * omega * omega * resp.n * resp.n * radial;

  Dyadic out(sep);
  out.abs_substituted = resp.substituted;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int p = 0; p < 3; ++p) s += levi_civita(i, j, p) * sep.direction[p];
      out.m[i][j] = pref * s;
    }
  return out;
}

Dyadic dipole_tensor_ee(double omega, const Separation& sep,
                        const ResponseModel& medium) {
  return dipole_tensor_ee_from_response(omega, sep, medium.eps_lossless(omega),
                                        medium.mu_lossless(omega));
}

Dyadic dipole_tensor_mm(double omega, const Separation& sep,
                        const ResponseModel& medium) {
  return dipole_tensor_mm_from_response(omega, sep, medium.eps_lossless(omega),
                                        medium.mu_lossless(omega));
}

Dyadic dipole_tensor_em(double omega, const Separation& sep,
                        const ResponseModel& medium) {
  return dipole_tensor_em_from_response(omega, sep, medium.eps_lossless(omega),
                                        medium.mu_lossless(omega));
}

ComplexDyadic correlator_kernel(FieldPair pair, double omega, const Vec3& k_hat,
                                const Separation& sep,
                                const ResponseModel& medium) {
  require_frequency(omega);
  if (std::abs(norm(k_hat) - 1.0) > 1e-12)
    throw DomainError("correlator_kernel: k_hat must be a unit vector");

  const double eps = medium.eps_lossless(omega);
  const double mu = medium.mu_lossless(omega);
  if (!(eps * mu > 0.0))
    throw ModelError("correlator_kernel: no propagating mode at this frequency");
  const double n = std::sqrt(eps * mu);
  const double g = medium.group_index(omega);
  if (!(g > 0.0))
    throw ModelError("correlator_kernel: non-positive group index");

  const double k_dot_r = n * omega * sep.distance * dot(k_hat, sep.direction);
  const std::complex<double> phase(std::cos(k_dot_r), -std::sin(k_dot_r));
  constexpr double two_pi = 2.0 * 3.14159265358979323846;

  ComplexDyadic out(sep);
  switch (pair) {
    case FieldPair::ee:
    case FieldPair::hh: {
      const double pref = (pair == FieldPair::ee)
                              ? two_pi * omega * mu / (n * g)
                              : two_pi * n * omega / (mu * g);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          out.m[i][j] = pref * (kronecker(i, j) - k_hat[i] * k_hat[j]) * phase;
      break;
    }
    case FieldPair::eh: {
      const double pref = two_pi * omega / g;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double s = 0.0;
          for (int l = 0; l < 3; ++l) s += levi_civita(i, j, l) * k_hat[l];
          out.m[i][j] = pref * s * phase;
        }
      break;
    }
  }
  return out;
}

}  // namespace vdw
