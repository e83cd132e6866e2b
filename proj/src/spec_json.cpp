#include "vdw/spec_json.hpp"

#include <json.hpp>

namespace vdw {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SpecError(what, "not valid JSON");
  if (!j.is_object()) throw SpecError(what, "expected a JSON object");
  return j;
}

double number_field(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(path + "." + key, "missing");
  if (!it->is_number()) throw SpecError(path + "." + key, "expected a number");
  return it->get<double>();
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SpecError(path + "." + key, "unknown key");
  }
}

std::vector<LorentzTerm> parse_lorentz_terms(const json& part, const std::string& path) {
  if (!part.is_object()) throw SpecError(path, "expected an object");
  reject_unknown(part, path, {"terms"});
  const auto it = part.find("terms");
  if (it == part.end()) throw SpecError(path + ".terms", "missing");
  if (!it->is_array()) throw SpecError(path + ".terms", "expected an array");

  std::vector<LorentzTerm> terms;
  int idx = 0;
  for (const auto& t : *it) {
    const std::string tp = path + ".terms[" + std::to_string(idx++) + "]";
    if (!t.is_object()) throw SpecError(tp, "expected an object");
    reject_unknown(t, tp, {"wp", "w0", "gamma"});
    LorentzTerm term;
    term.plasma_strength = number_field(t, tp, "wp");
    term.resonance = number_field(t, tp, "w0");
    term.damping = t.contains("gamma") ? number_field(t, tp, "gamma") : 0.0;
    if (!(term.plasma_strength >= 0.0))
      throw SpecError(tp + ".wp", "must be >= 0");
    if (!(term.resonance > 0.0)) throw SpecError(tp + ".w0", "must be > 0");
    if (!(term.damping >= 0.0)) throw SpecError(tp + ".gamma", "must be >= 0");
    terms.push_back(term);
  }
  return terms;
}

PolarizabilityModel parse_polarizability_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected a JSON object");
  reject_unknown(j, path, {"static", "two_level", "terms"});
  const int present = int(j.contains("static")) + int(j.contains("two_level")) +
                      int(j.contains("terms"));
  if (present == 0)
    throw SpecError(path, "expected one of: static, two_level, terms");
  if (present > 1)
    throw SpecError(path, "static, two_level and terms are mutually exclusive");

  if (j.contains("static")) {
    if (!j["static"].is_number())
      throw SpecError(path + ".static", "expected a number");
    const double a0 = j["static"].get<double>();
    if (!(a0 >= 0.0)) throw SpecError(path + ".static", "must be >= 0");
    return PolarizabilityModel::static_value(a0);
  }

  auto parse_term = [&](const json& t, const std::string& tp) {
    if (!t.is_object()) throw SpecError(tp, "expected an object");
    reject_unknown(t, tp, {"w0", "alpha0"});
    PolarizabilityModel::Term term;
    term.transition_frequency = number_field(t, tp, "w0");
    term.static_value = number_field(t, tp, "alpha0");
    if (!(term.transition_frequency > 0.0))
      throw SpecError(tp + ".w0", "must be > 0");
    if (!(term.static_value >= 0.0)) throw SpecError(tp + ".alpha0", "must be >= 0");
    return term;
  };

  if (j.contains("two_level"))
    return PolarizabilityModel::term_sum(
        {parse_term(j["two_level"], path + ".two_level")});

  if (!j["terms"].is_array())
    throw SpecError(path + ".terms", "expected an array");
  std::vector<PolarizabilityModel::Term> terms;
  int idx = 0;
  for (const auto& t : j["terms"])
    terms.push_back(parse_term(t, path + ".terms[" + std::to_string(idx++) + "]"));
  return PolarizabilityModel::term_sum(std::move(terms));
}

}  // namespace

ResponseModel parse_response_model(const std::string& json_text) {
  const json j = parse_text(json_text, "medium");
  reject_unknown(j, "medium", {"eps", "mu", "two_level_dielectric"});

  if (j.contains("two_level_dielectric")) {
    if (j.contains("eps") || j.contains("mu"))
      throw SpecError("medium.two_level_dielectric",
                      "cannot be combined with eps/mu");
    const auto& tl = j["two_level_dielectric"];
    if (!tl.is_object())
      throw SpecError("medium.two_level_dielectric", "expected an object");
    reject_unknown(tl, "medium.two_level_dielectric", {"C"});
    const double c = number_field(tl, "medium.two_level_dielectric", "C");
    if (!(c >= 0.0))
      throw SpecError("medium.two_level_dielectric.C", "must be >= 0");
    return ResponseModel::two_level_dielectric(c);
  }

  std::vector<LorentzTerm> eps, mu;
  if (j.contains("eps")) eps = parse_lorentz_terms(j["eps"], "medium.eps");
  if (j.contains("mu")) mu = parse_lorentz_terms(j["mu"], "medium.mu");
  return ResponseModel(std::move(eps), std::move(mu));
}

PolarizabilityModel parse_polarizability_model(const std::string& json_text) {
  const json j = parse_text(json_text, "polarizability");
  return parse_polarizability_json(j, "polarizability");
}

Particle parse_particle(const std::string& json_text) {
  const json j = parse_text(json_text, "particle");
  reject_unknown(j, "particle", {"alpha_e", "alpha_m"});
  Particle p;
  if (j.contains("alpha_e"))
    p.alpha_e = parse_polarizability_json(j["alpha_e"], "particle.alpha_e");
  if (j.contains("alpha_m"))
    p.alpha_m = parse_polarizability_json(j["alpha_m"], "particle.alpha_m");
  return p;
}

}  // namespace vdw
