#include "vdw/materials.hpp"

#include <cmath>

namespace vdw {

namespace {

void check_terms(const std::vector<LorentzTerm>& terms, const char* which) {
  for (const auto& t : terms) {
    if (!(t.plasma_strength >= 0.0) || !std::isfinite(t.plasma_strength))
      throw DomainError(std::string(which) + ": plasma_strength must be >= 0");
    if (!(t.resonance > 0.0) || !std::isfinite(t.resonance))
      throw DomainError(std::string(which) + ": resonance must be > 0");
    if (!(t.damping >= 0.0) || !std::isfinite(t.damping))
      throw DomainError(std::string(which) + ": damping must be >= 0");
  }
}

double sum_iu(const std::vector<LorentzTerm>& terms, double u) {
  double s = 0.0;
  for (const auto& t : terms)
    s += t.plasma_strength * t.plasma_strength /
         (t.resonance * t.resonance + t.damping * u + u * u);
  return s;
}

std::complex<double> sum_complex(const std::vector<LorentzTerm>& terms, double w) {
  std::complex<double> s = 0.0;
  for (const auto& t : terms)
    s += t.plasma_strength * t.plasma_strength /
         std::complex<double>(t.resonance * t.resonance - w * w, -t.damping * w);
  return s;
}

double sum_lossless(const std::vector<LorentzTerm>& terms, double w) {
  double s = 0.0;
  for (const auto& t : terms)
    s += t.plasma_strength * t.plasma_strength /
         (t.resonance * t.resonance - w * w);
  return s;
}

// d/dw of the lossless sum.
double sum_lossless_deriv(const std::vector<LorentzTerm>& terms, double w) {
  double s = 0.0;
  for (const auto& t : terms) {
    const double d = t.resonance * t.resonance - w * w;
    s += t.plasma_strength * t.plasma_strength * 2.0 * w / (d * d);
  }
  return s;
}

void require_frequency_iu(double u) {
  if (!(u >= 0.0) || !std::isfinite(u))
    throw DomainError("imaginary-axis frequency must be finite and >= 0");
}

void require_frequency_real(double w) {
  if (!(w > 0.0) || !std::isfinite(w))
    throw DomainError("real-axis frequency must be finite and > 0");
}

}  // namespace

ResponseModel::ResponseModel(std::vector<LorentzTerm> electric,
                             std::vector<LorentzTerm> magnetic)
    : electric_(std::move(electric)), magnetic_(std::move(magnetic)) {
  check_terms(electric_, "eps");
  check_terms(magnetic_, "mu");
}

ResponseModel ResponseModel::two_level_dielectric(double coupling) {
  if (!(coupling >= 0.0) || !std::isfinite(coupling))
    throw DomainError("two_level_dielectric: C must be >= 0");
  if (coupling == 0.0) return vacuum();
  return ResponseModel({LorentzTerm{std::sqrt(coupling), 1.0, 0.0}}, {});
}

double ResponseModel::eps_iu(double u) const {
  require_frequency_iu(u);
  return 1.0 + sum_iu(electric_, u);
}

double ResponseModel::mu_iu(double u) const {
  require_frequency_iu(u);
  return 1.0 + sum_iu(magnetic_, u);
}

double ResponseModel::n_iu(double u) const {
  return std::sqrt(eps_iu(u) * mu_iu(u));
}

ComplexResponse ResponseModel::response_complex(double omega) const {
  require_frequency_real(omega);
  ComplexResponse r;
  r.eps = 1.0 + sum_complex(electric_, omega);
  r.mu = 1.0 + sum_complex(magnetic_, omega);
  r.kappa = 1.0 / r.mu;
  r.n = std::sqrt(r.eps * r.mu);
  if (r.n.imag() < 0.0) r.n = -r.n;
  if (r.n.imag() == 0.0 && r.n.real() < 0.0) r.n = -r.n;
  return r;
}

double ResponseModel::eps_lossless(double omega) const {
  require_frequency_real(omega);
  const double v = 1.0 + sum_lossless(electric_, omega);
  if (!std::isfinite(v))
    throw SingularityError("eps_lossless: evaluation at a lossless pole");
  return v;
}

double ResponseModel::mu_lossless(double omega) const {
  require_frequency_real(omega);
  const double v = 1.0 + sum_lossless(magnetic_, omega);
  if (!std::isfinite(v))
    throw SingularityError("mu_lossless: evaluation at a lossless pole");
  return v;
}

double ResponseModel::group_index(double omega) const {
  const double eps = eps_lossless(omega);
  const double mu = mu_lossless(omega);
  const double n2 = eps * mu;
  if (!(n2 > 0.0))
    throw ModelError("group_index: no propagating mode (eps*mu <= 0)");
  const double n = std::sqrt(n2);
  const double deps = sum_lossless_deriv(electric_, omega);
  const double dmu = sum_lossless_deriv(magnetic_, omega);
  const double dn = (deps * mu + eps * dmu) / (2.0 * n);
  const double g = n + omega * dn;
  if (!std::isfinite(g))
    throw SingularityError("group_index: evaluation at a lossless pole");
  return g;
}

PolarizabilityModel PolarizabilityModel::static_value(double alpha0) {
  if (!(alpha0 >= 0.0) || !std::isfinite(alpha0))
    throw DomainError("polarizability: static value must be >= 0");
  PolarizabilityModel m;
  m.static_part_ = alpha0;
  return m;
}

PolarizabilityModel PolarizabilityModel::two_level(double transition_frequency,
                                                   double alpha0) {
  return term_sum({Term{transition_frequency, alpha0}});
}

PolarizabilityModel PolarizabilityModel::term_sum(std::vector<Term> terms) {
  PolarizabilityModel m;
  for (const auto& t : terms) {
    if (!(t.transition_frequency > 0.0) || !std::isfinite(t.transition_frequency))
      throw DomainError("polarizability: transition frequency must be > 0");
    if (!(t.static_value >= 0.0) || !std::isfinite(t.static_value))
      throw DomainError("polarizability: alpha(0) must be >= 0");
  }
  m.terms_ = std::move(terms);
  return m;
}

double PolarizabilityModel::alpha_iu(double u) const {
  require_frequency_iu(u);
  double a = static_part_;
  for (const auto& t : terms_) {
    const double w02 = t.transition_frequency * t.transition_frequency;
    a += t.static_value * w02 / (w02 + u * u);
  }
  return a;
}

double PolarizabilityModel::static_limit() const {
  double a = static_part_;
  for (const auto& t : terms_) a += t.static_value;
  return a;
}

bool PolarizabilityModel::is_zero() const {
  if (static_part_ != 0.0) return false;
  for (const auto& t : terms_)
    if (t.static_value != 0.0) return false;
  return true;
}

double PolarizabilityModel::frequency_scale() const {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& t : terms_)
    if (t.static_value > 0.0) s = std::min(s, t.transition_frequency);
  return s;
}

}  // namespace vdw
