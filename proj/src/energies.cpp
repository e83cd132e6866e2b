#include "vdw/energies.hpp"

#include <algorithm>
#include <cmath>

#include "vdw/green.hpp"
#include "vdw/kernels.hpp"

namespace vdw {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_query(const InteractionQuery& q) {
  if (!(q.separation > 0.0) || !std::isfinite(q.separation))
    throw DomainError("InteractionQuery: separation must be positive and finite");
  if (!q.terms.any())
    throw DomainError("InteractionQuery: at least one term must be selected");
  q.quadrature.validate();
}

TermResult exact_zero() {
  TermResult t;
  t.value = 0.0;
  t.quadrature.value = 0.0;
  t.quadrature.error_estimate = 0.0;
  t.quadrature.evaluations = 0;
  t.quadrature.converged = true;
  return t;
}

enum class TermKind { ee, mm, em };

bool term_vanishes(TermKind kind, const InteractionQuery& q) {
  switch (kind) {
    case TermKind::ee:
      return q.particle_a.alpha_e.is_zero() || q.particle_b.alpha_e.is_zero();
    case TermKind::mm:
      return q.particle_a.alpha_m.is_zero() || q.particle_b.alpha_m.is_zero();
    case TermKind::em:
      return (q.particle_a.alpha_e.is_zero() || q.particle_b.alpha_m.is_zero()) &&
             (q.particle_a.alpha_m.is_zero() || q.particle_b.alpha_e.is_zero());
  }
  return false;
}

// Spectral integral of the mode-sum path; the closed polynomial forms.
QuadratureResult mode_sum_integral(TermKind kind, const InteractionQuery& q) {
  const double r = q.separation;
  const auto& a = q.particle_a;
  const auto& b = q.particle_b;
  const ResponseModel& med = q.medium;

  std::function<double(double)> f;
  switch (kind) {
    case TermKind::ee:
      f = [&a, &b, &med, r](double u) {
        const double eps = med.eps_iu(u);
        const double x = 2.0 * med.n_iu(u) * u * r;
        return a.alpha_e.alpha_iu(u) * b.alpha_e.alpha_iu(u) / (eps * eps) *
               poly_F(x) * std::exp(-x);
      };
      break;
    case TermKind::mm:
      f = [&a, &b, &med, r](double u) {
        const double mu = med.mu_iu(u);
        const double x = 2.0 * med.n_iu(u) * u * r;
        return a.alpha_m.alpha_iu(u) * b.alpha_m.alpha_iu(u) / (mu * mu) *
               poly_F(x) * std::exp(-x);
      };
      break;
    case TermKind::em:
      f = [&a, &b, &med, r](double u) {
        const double x = 2.0 * med.n_iu(u) * u * r;
        const double cross = a.alpha_e.alpha_iu(u) * b.alpha_m.alpha_iu(u) +
                             a.alpha_m.alpha_iu(u) * b.alpha_e.alpha_iu(u);
        return u * u * cross * poly_G(x) * std::exp(-x);
      };
      break;
  }
  return integrate_semi_infinite(f, energy_scale_hint(q), q.quadrature);
}

// Spectral integral of the Green-trace path; traces are assembled
// numerically from the dyadic matrices, not from the closed forms.
QuadratureResult green_trace_integral(TermKind kind, const InteractionQuery& q) {
  const Separation sep = Separation::along_z(q.separation);
  const auto& a = q.particle_a;
  const auto& b = q.particle_b;
  const ResponseModel& med = q.medium;

  std::function<double(double)> f;
  switch (kind) {
    case TermKind::ee:
      f = [&a, &b, &med, sep](double u) {
        const double u2 = u * u;
        return a.alpha_e.alpha_iu(u) * b.alpha_e.alpha_iu(u) * u2 * u2 *
               trace_GG(u, sep, med);
      };
      break;
    case TermKind::mm:
      f = [&a, &b, &med, sep](double u) {
        const double ratio = med.eps_iu(u) / med.mu_iu(u);
        const double u2 = u * u;
        return a.alpha_m.alpha_iu(u) * b.alpha_m.alpha_iu(u) * u2 * u2 *
               ratio * ratio * trace_GG(u, sep, med);
      };
      break;
    case TermKind::em:
      f = [&a, &b, &med, sep](double u) {
        const double kappa = 1.0 / med.mu_iu(u);
        const double cross = a.alpha_e.alpha_iu(u) * b.alpha_m.alpha_iu(u) +
                             a.alpha_m.alpha_iu(u) * b.alpha_e.alpha_iu(u);
        return u * u * cross * kappa * kappa * trace_curlG_curlG(u, sep, med);
      };
      break;
  }
  return integrate_semi_infinite(f, energy_scale_hint(q), q.quadrature);
}

double term_prefactor(TermKind kind, double r) {
  switch (kind) {
    case TermKind::ee:
    case TermKind::mm:
      return -1.0 / (16.0 * kPi * std::pow(r, 6));
    case TermKind::em:
      return 1.0 / (4.0 * kPi * std::pow(r, 4));
  }
  return 0.0;
}

double green_prefactor(TermKind kind) {
  const double k = green_path_calibration() / (2.0 * kPi);
  return (kind == TermKind::em) ? k : -k;
}

TermResult evaluate_term(TermKind kind, const InteractionQuery& q) {
  require_query(q);
  if (term_vanishes(kind, q)) return exact_zero();

  // Quadrature metadata is rescaled so value and error refer to the energy.
  TermResult out;
  if (q.method == Method::mode_sum || q.method == Method::both) {
    const double pref = term_prefactor(kind, q.separation);
    out.quadrature = mode_sum_integral(kind, q);
    out.quadrature.value *= pref;
    out.quadrature.error_estimate *= std::abs(pref);
    out.value = out.quadrature.value;
  }
  if (q.method == Method::green_trace || q.method == Method::both) {
    const double pref = green_prefactor(kind);
    QuadratureResult g = green_trace_integral(kind, q);
    g.value *= pref;
    g.error_estimate *= std::abs(pref);
    if (q.method == Method::green_trace) {
      out.quadrature = g;
      out.value = g.value;
    } else {
      out.cross_check = g.value;
      out.quadrature.converged = out.quadrature.converged && g.converged;
    }
  }
  return out;
}

}  // namespace

double energy_scale_hint(const InteractionQuery& query) {
  double hint = 1.0 / (2.0 * query.medium.n_iu(0.0) * query.separation);
  for (const PolarizabilityModel* m :
       {&query.particle_a.alpha_e, &query.particle_a.alpha_m,
        &query.particle_b.alpha_e, &query.particle_b.alpha_m}) {
    const double s = m->frequency_scale();
    if (std::isfinite(s)) hint = std::min(hint, s);
  }
  return hint;
}

TermResult w_ee(const InteractionQuery& query) {
  return evaluate_term(TermKind::ee, query);
}

TermResult w_mm(const InteractionQuery& query) {
  return evaluate_term(TermKind::mm, query);
}

TermResult w_em(const InteractionQuery& query) {
  return evaluate_term(TermKind::em, query);
}

EnergyBreakdown w_total(const InteractionQuery& query) {
  require_query(query);
  EnergyBreakdown out;
  out.method = query.method;

  if (query.terms.ee) out.ee = w_ee(query);
  if (query.terms.mm) out.mm = w_mm(query);
  if (query.terms.em) out.em = w_em(query);
  out.w_ee = out.ee.value;
  out.w_mm = out.mm.value;
  out.w_em = out.em.value;
  out.w_total = out.w_ee + out.w_mm + out.w_em;
  out.converged = (!query.terms.ee || out.ee.converged()) &&
                  (!query.terms.mm || out.mm.converged()) &&
                  (!query.terms.em || out.em.converged());

  if (query.method == Method::both) {
    double disc = 0.0;
    for (const TermResult* t : {&out.ee, &out.mm, &out.em}) {
      if (!t->cross_check) continue;
      const double scale = std::max(std::abs(t->value), 1e-300);
      disc = std::max(disc, std::abs(*t->cross_check - t->value) / scale);
    }
    out.path_discrepancy = disc;
  }
  return out;
}

QuadratureResult d_ratio(double r, double coupling, const QuadratureConfig& cfg) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw DomainError("d_ratio: r must be positive and finite");
  if (!(coupling >= 0.0) || !std::isfinite(coupling))
    throw DomainError("d_ratio: C must be >= 0");

  auto f = [r, coupling](double y) {
    const double window = 1.0 / (y * y + 1.0);
    const double eps = 1.0 + coupling * window;
    const double nry = std::sqrt(eps) * r * y;
    return window * window / (eps * eps) * poly_P(nry) * std::exp(-2.0 * nry);
  };
  const double n0 = std::sqrt(1.0 + coupling);
  const double hint = std::min(1.0, 1.0 / (2.0 * n0 * r));

  QuadratureResult res = integrate_semi_infinite(f, hint, cfg);
  res.value *= 4.0 / (3.0 * kPi);
  res.error_estimate *= 4.0 / (3.0 * kPi);
  return res;
}

double london_energy(double transition_frequency, double alpha0, double separation) {
  return -3.0 * transition_frequency * alpha0 * alpha0 /
         (4.0 * std::pow(separation, 6));
}

double casimir_polder_ee(double alpha_a, double alpha_b, double separation) {
  return -23.0 * alpha_a * alpha_b / (4.0 * kPi * std::pow(separation, 7));
}

double casimir_polder_em(double alpha_e, double alpha_m, double separation) {
  return 7.0 * alpha_e * alpha_m / (4.0 * kPi * std::pow(separation, 7));
}

double large_r_medium_coefficient(double coupling) {
  const double c1 = 1.0 + coupling;
  return 23.0 / (3.0 * kPi * c1 * c1 * std::sqrt(c1));
}

}  // namespace vdw
