#pragma once

#include <optional>
#include <string>

#include "vdw/materials.hpp"
#include "vdw/quadrature.hpp"

namespace vdw {

struct Particle {
  PolarizabilityModel alpha_e;
  PolarizabilityModel alpha_m;
};

// mode_sum: imaginary-axis integrals of the closed polynomial forms.
// green_trace: imaginary-axis integrals over numerically assembled
// Green-dyadic traces. `both` evaluates the two independently and reports
// their relative discrepancy.
enum class Method { mode_sum, green_trace, both };

struct TermSelection {
  bool ee = false;
  bool mm = false;
  bool em = false;

  static TermSelection all() { return {true, true, true}; }
  bool any() const { return ee || mm || em; }
};

struct InteractionQuery {
  Particle particle_a;
  Particle particle_b;
  double separation = 1.0;  // R > 0
  ResponseModel medium;
  Method method = Method::mode_sum;
  TermSelection terms = TermSelection::all();
  QuadratureConfig quadrature;
};

struct TermResult {
  double value = 0.0;
  QuadratureResult quadrature;
  // Green-trace value when the query asked for both paths.
  std::optional<double> cross_check;
  bool converged() const { return quadrature.converged; }
};

struct EnergyBreakdown {
  double w_ee = 0.0;
  double w_mm = 0.0;
  double w_em = 0.0;
  double w_total = 0.0;
  TermResult ee, mm, em;
  Method method = Method::mode_sum;
  // Largest per-term relative gap between the two paths (method == both).
  std::optional<double> path_discrepancy;
  bool converged = true;
};

// Attractive electric-electric term, < 0 for nonzero polarizabilities:
//   -(hbar / 16 pi R^6) Int_0^inf du  a_e^A a_e^B eps^-2  F(x) e^-x,
// x = 2 n(iu) u R / c. Honors query.method.
TermResult w_ee(const InteractionQuery& query);

// Magnetic-magnetic term: as w_ee with magnetic polarizabilities and mu^-2.
TermResult w_mm(const InteractionQuery& query);

// Repulsive mixed term, > 0 when a cross product is nonzero:
//   +(hbar / 4 pi c^2 R^4) Int du u^2 [a_e^A a_m^B + a_m^A a_e^B] G(x) e^-x.
TermResult w_em(const InteractionQuery& query);

// Assembles the selected terms. For method == both the headline values come
// from the mode-sum path and path_discrepancy summarizes the cross-check.
EnergyBreakdown w_total(const InteractionQuery& query);

// Interaction energy over the London energy for two identical two-level
// atoms in the single-resonance dielectric with coupling C, as a function
// of r = w0 R / c:
//   D(r, C) = (4 / 3 pi) Int_0^inf dy (y^2+1)^-2 eps^-2 P(n r y) e^{-2 n r y},
// eps = 1 + C/(y^2+1) evaluated at i w0 y.
QuadratureResult d_ratio(double r, double coupling, const QuadratureConfig& cfg = {});

// Closed-form reference limits.

// Nonretarded London energy, -3 hbar w0 alpha(0)^2 / (4 R^6).
double london_energy(double transition_frequency, double alpha0, double separation);

// Retarded electric-electric limit in vacuum for static polarizabilities,
// -23 hbar c a_A a_B / (4 pi R^7); exact at every R for static models.
double casimir_polder_ee(double alpha_a, double alpha_b, double separation);

// Retarded electric-magnetic limit in vacuum for static polarizabilities,
// +7 hbar c a_e a_m / (4 pi R^7), from Int x^2 (x+2)^2 e^-x dx = 56.
double casimir_polder_em(double alpha_e, double alpha_m, double separation);

// Large-r asymptote coefficient of D in the dielectric:
//   D(r, C) -> large_r_medium_coefficient(C) / r,
//   coefficient = 23 / (3 pi (1+C)^2 sqrt(1+C)).
double large_r_medium_coefficient(double coupling);

// Scale hint used for all energy integrals: the smaller of the
// polarizability transition scales and the retardation scale c/(2 n(0) R).
double energy_scale_hint(const InteractionQuery& query);

}  // namespace vdw
