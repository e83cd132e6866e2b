#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "vdw/errors.hpp"

namespace vdw {

// Natural units throughout: hbar = c = 1, frequencies in a caller-chosen
// reference unit, lengths in inverse frequencies, energies in frequencies.

// One oscillator of a Drude-Lorentz sum.
//   imaginary axis:  contribution wp^2 / (w0^2 + gamma*u + u^2)
//   real axis:       contribution wp^2 / (w0^2 - w^2 - i*gamma*w)
struct LorentzTerm {
  double plasma_strength = 0.0;  // wp >= 0
  double resonance = 1.0;        // w0 > 0
  double damping = 0.0;          // gamma >= 0
};

struct ComplexResponse {
  std::complex<double> eps;
  std::complex<double> mu;
  std::complex<double> n;      // branch with Im n >= 0
  std::complex<double> kappa;  // 1/mu
};

// Isotropic host medium: permittivity and permeability as Lorentz sums.
// On the imaginary frequency axis both are real, >= 1, and non-increasing.
class ResponseModel {
 public:
  ResponseModel() = default;  // vacuum
  ResponseModel(std::vector<LorentzTerm> electric, std::vector<LorentzTerm> magnetic);

  static ResponseModel vacuum() { return ResponseModel(); }

  // Single-resonance dielectric with eps(i*w0*y) = 1 + C/(y^2+1) and mu = 1.
  // The resonance sits at unit frequency, i.e. the caller's frequency unit
  // is the transition frequency.
  static ResponseModel two_level_dielectric(double coupling);

  double eps_iu(double u) const;
  double mu_iu(double u) const;
  double n_iu(double u) const;

  // Complex response at real frequency w > 0, Im n >= 0 branch.
  ComplexResponse response_complex(double omega) const;

  // Real response at real frequency with damping dropped. May be negative
  // between a resonance and its plasma edge. Throws SingularityError at a
  // lossless pole.
  double eps_lossless(double omega) const;
  double mu_lossless(double omega) const;

  // Group index n + w dn/dw on the lossless branch. Requires a propagating
  // mode (eps*mu > 0) at the evaluation point.
  double group_index(double omega) const;

  const std::vector<LorentzTerm>& electric() const { return electric_; }
  const std::vector<LorentzTerm>& magnetic() const { return magnetic_; }
  bool is_vacuum() const { return electric_.empty() && magnetic_.empty(); }

 private:
  std::vector<LorentzTerm> electric_;
  std::vector<LorentzTerm> magnetic_;
};

// Scalar particle polarizability on the imaginary axis:
//   alpha(iu) = alpha_static + sum_j a0_j * w0_j^2 / (w0_j^2 + u^2).
// Covers the static model, the two-level model, and sums of two-level terms.
class PolarizabilityModel {
 public:
  struct Term {
    double transition_frequency;  // w0 > 0
    double static_value;          // alpha(0) contribution, >= 0
  };

  PolarizabilityModel() = default;  // identically zero

  static PolarizabilityModel zero() { return PolarizabilityModel(); }
  static PolarizabilityModel static_value(double alpha0);
  static PolarizabilityModel two_level(double transition_frequency, double alpha0);
  static PolarizabilityModel term_sum(std::vector<Term> terms);

  double alpha_iu(double u) const;
  double static_limit() const;  // alpha(0)
  bool is_zero() const;

  // Smallest transition frequency, +inf when only the static part is present.
  double frequency_scale() const;

  const std::vector<Term>& terms() const { return terms_; }
  double static_part() const { return static_part_; }

 private:
  double static_part_ = 0.0;
  std::vector<Term> terms_;
};

}  // namespace vdw
