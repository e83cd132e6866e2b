// vdw: ground-state van der Waals interaction energies for two polarizable
// particles in a dispersive magneto-dielectric host.
//
// Subcommands: energy (single point, JSON), sweep (separation grid, CSV),
// dratio (normalized interaction vs r, CSV), validate (built-in checks).

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdw/energies.hpp"
#include "vdw/spec_json.hpp"
#include "vdw/sweep.hpp"
#include "vdw/validate.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

// Locale-independent, full round-trip precision (17 significant digits).
std::string fmt_full(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Shortest exact representation, for labels.
std::string fmt_short(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// JSON config files: top-level keys are long option names, a key matching a
// subcommand name holds that subcommand's options. Command-line flags win.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const std::exception& e) {
      throw CLI::FileError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::FileError("config: expected a JSON object");
    std::vector<CLI::ConfigItem> items;
    emit(j, {}, items);
    return items;
  }

 private:
  static void emit(const nlohmann::json& obj, std::vector<std::string> parents,
                   std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        auto p = parents;
        p.push_back(key);
        emit(value, std::move(p), items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }

  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }
};

struct GlobalFlags {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  std::string out;
  std::string format;  // empty: per-command default
  double unit_scale = 1.0;

  vdw::QuadratureConfig quadrature() const {
    vdw::QuadratureConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    return cfg;
  }
};

struct AtomFlags {
  std::string atom_a = R"({"alpha_e":{"static":1.0}})";
  std::string atom_b = R"({"alpha_e":{"static":1.0}})";
  std::string medium = "{}";
  std::string method = "modesum";
  std::vector<std::string> terms;
};

struct GridFlags {
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 2;
  std::string spacing = "lin";

  vdw::GridSpec spec() const {
    vdw::GridSpec g;
    g.min = r_min;
    g.max = r_max;
    g.points = points;
    g.spacing = spacing == "log" ? vdw::Spacing::logarithmic : vdw::Spacing::linear;
    return g;
  }
};

vdw::Method parse_method(const std::string& m) {
  if (m == "modesum") return vdw::Method::mode_sum;
  if (m == "green") return vdw::Method::green_trace;
  if (m == "both") return vdw::Method::both;
  throw vdw::SpecError("method", "must be one of modesum, green, both");
}

vdw::TermSelection parse_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return vdw::TermSelection::all();
  vdw::TermSelection sel;
  for (const auto& t : terms) {
    if (t == "all")
      sel = vdw::TermSelection::all();
    else if (t == "ee")
      sel.ee = true;
    else if (t == "mm")
      sel.mm = true;
    else if (t == "em")
      sel.em = true;
    else
      throw vdw::SpecError("terms", "must be a subset of {ee, mm, em, all}");
  }
  return sel;
}

vdw::InteractionQuery build_query(const AtomFlags& atoms, const GlobalFlags& g) {
  vdw::InteractionQuery q;
  q.particle_a = vdw::parse_particle(atoms.atom_a);
  q.particle_b = vdw::parse_particle(atoms.atom_b);
  q.medium = vdw::parse_response_model(atoms.medium);
  q.method = parse_method(atoms.method);
  q.terms = parse_terms(atoms.terms);
  q.quadrature = g.quadrature();
  return q;
}

void write_output(const GlobalFlags& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot open output file: " + g.out);
  f << payload;
}

const char* method_name(vdw::Method m) {
  switch (m) {
    case vdw::Method::mode_sum: return "modesum";
    case vdw::Method::green_trace: return "green";
    case vdw::Method::both: return "both";
  }
  return "?";
}

ordered_json term_error_json(const vdw::TermResult& t) {
  return ordered_json{{"estimate", t.quadrature.error_estimate},
                      {"evaluations", t.quadrature.evaluations},
                      {"converged", t.quadrature.converged}};
}

int run_energy(double separation, const AtomFlags& atoms, const GlobalFlags& g) {
  vdw::InteractionQuery q = build_query(atoms, g);
  q.separation = separation;
  const vdw::EnergyBreakdown b = vdw::w_total(q);
  const double s = g.unit_scale;

  ordered_json j;
  j["R"] = q.separation;
  j["W_ee"] = b.w_ee * s;
  j["W_mm"] = b.w_mm * s;
  j["W_em"] = b.w_em * s;
  j["W_total"] = b.w_total * s;
  j["method"] = method_name(b.method);
  ordered_json err;
  if (q.terms.ee) err["ee"] = term_error_json(b.ee);
  if (q.terms.mm) err["mm"] = term_error_json(b.mm);
  if (q.terms.em) err["em"] = term_error_json(b.em);
  j["err"] = err;
  j["converged"] = b.converged;
  if (b.path_discrepancy) j["path_discrepancy"] = *b.path_discrepancy;
  if (s != 1.0) j["unit_scale"] = s;

  if (g.format == "csv") {
    std::ostringstream os;
    os << "R,W_ee,W_mm,W_em,W_total,err_est\n"
       << fmt_full(q.separation) << ',' << fmt_full(b.w_ee * s) << ','
       << fmt_full(b.w_mm * s) << ',' << fmt_full(b.w_em * s) << ','
       << fmt_full(b.w_total * s) << ','
       << fmt_full((b.ee.quadrature.error_estimate +
                    b.mm.quadrature.error_estimate +
                    b.em.quadrature.error_estimate) * s)
       << '\n';
    write_output(g, os.str());
  } else {
    write_output(g, j.dump(2) + "\n");
  }
  return b.converged ? kExitOk : kExitNotConverged;
}

int run_sweep(const GridFlags& grid, const AtomFlags& atoms, const GlobalFlags& g) {
  const vdw::InteractionQuery base = build_query(atoms, g);
  const std::vector<double> rs = grid.spec().make();
  const auto rows = vdw::sweep_separation(base, rs, vdw::Execution::parallel,
                                          vdw::thread_cap_from_env());
  const double s = g.unit_scale;

  bool converged = true;
  for (const auto& row : rows) converged = converged && row.breakdown.converged;

  if (g.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      const auto& b = row.breakdown;
      arr.push_back(ordered_json{{"R", row.separation},
                                 {"W_ee", b.w_ee * s},
                                 {"W_mm", b.w_mm * s},
                                 {"W_em", b.w_em * s},
                                 {"W_total", b.w_total * s},
                                 {"converged", b.converged}});
    }
    write_output(g, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "R,W_ee,W_mm,W_em,W_total,err_est\n";
    for (const auto& row : rows) {
      const auto& b = row.breakdown;
      const double err = b.ee.quadrature.error_estimate +
                         b.mm.quadrature.error_estimate +
                         b.em.quadrature.error_estimate;
      os << fmt_full(row.separation) << ',' << fmt_full(b.w_ee * s) << ','
         << fmt_full(b.w_mm * s) << ',' << fmt_full(b.w_em * s) << ','
         << fmt_full(b.w_total * s) << ',' << fmt_full(err * s) << '\n';
    }
    write_output(g, os.str());
  }
  return converged ? kExitOk : kExitNotConverged;
}

int run_dratio(const GridFlags& grid, const std::vector<double>& couplings,
               const GlobalFlags& g) {
  for (double c : couplings)
    if (!(c >= 0.0)) throw vdw::SpecError("C", "must be >= 0");
  const std::vector<double> rs = grid.spec().make();
  const auto table = vdw::dratio_grid(rs, couplings, g.quadrature(),
                                      vdw::Execution::parallel,
                                      vdw::thread_cap_from_env());

  bool converged = true;
  for (const auto& row : table)
    for (const auto& cell : row) converged = converged && cell.converged;

  if (g.format == "json") {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      ordered_json row{{"r", rs[i]}};
      for (std::size_t j = 0; j < couplings.size(); ++j)
        row["D_C" + fmt_short(couplings[j])] = table[i][j].value;
      arr.push_back(row);
    }
    write_output(g, arr.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "r";
    for (double c : couplings) os << ",D_C" << fmt_short(c);
    os << '\n';
    for (std::size_t i = 0; i < rs.size(); ++i) {
      os << fmt_full(rs[i]);
      for (std::size_t j = 0; j < couplings.size(); ++j)
        os << ',' << fmt_full(table[i][j].value);
      os << '\n';
    }
    write_output(g, os.str());
  }
  return converged ? kExitOk : kExitNotConverged;
}

int run_validate(bool quick, const GlobalFlags& g) {
  vdw::ValidateOptions opts;
  opts.quick = quick;
  opts.quadrature = g.quadrature();
  opts.max_threads = vdw::thread_cap_from_env();
  const auto results = vdw::run_validation(opts);

  std::ostringstream os;
  vdw::print_report(os, results);
  write_output(g, os.str());
  return vdw::all_passed(results) ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"van der Waals interactions in a magneto-dielectric host"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; explicit flags override");

  GlobalFlags global;
  app.add_option("--rel-tol", global.rel_tol, "quadrature relative tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--abs-tol", global.abs_tol, "quadrature absolute tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", global.out, "output path (default: stdout)");
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--unit-scale", global.unit_scale,
                 "multiply reported energies by this factor")
      ->capture_default_str();

  double separation = 1.0;
  AtomFlags atoms;
  GridFlags grid;
  std::vector<double> couplings;
  bool quick = false;

  auto add_atom_flags = [&](CLI::App* cmd) {
    cmd->add_option("--atom-a", atoms.atom_a, "particle A JSON spec")
        ->capture_default_str();
    cmd->add_option("--atom-b", atoms.atom_b, "particle B JSON spec")
        ->capture_default_str();
    cmd->add_option("--medium", atoms.medium, "host medium JSON spec")
        ->capture_default_str();
    cmd->add_option("--method", atoms.method, "evaluation path")
        ->check(CLI::IsMember({"modesum", "green", "both"}))
        ->capture_default_str();
    cmd->add_option("--terms", atoms.terms,
                    "energy terms (ee, mm, em, all) [default: all]");
  };
  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--r-min", grid.r_min, "grid minimum")->required();
    cmd->add_option("--r-max", grid.r_max, "grid maximum")->required();
    cmd->add_option("--points", grid.points, "grid size")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    cmd->add_option("--spacing", grid.spacing, "grid spacing")
        ->check(CLI::IsMember({"lin", "log"}))
        ->capture_default_str();
  };

  CLI::App* energy = app.add_subcommand("energy", "single-point energy breakdown (JSON)");
  energy->fallthrough();
  energy->add_option("--separation", separation, "particle separation R")
      ->required()
      ->check(CLI::PositiveNumber);
  add_atom_flags(energy);

  CLI::App* sweep = app.add_subcommand("sweep", "energies over a separation grid (CSV)");
  sweep->fallthrough();
  add_grid_flags(sweep);
  add_atom_flags(sweep);

  CLI::App* dratio = app.add_subcommand(
      "dratio", "interaction over London energy vs r = w0 R / c (CSV)");
  dratio->fallthrough();
  dratio->add_option("--C", couplings, "medium coupling (repeatable)")->required();
  add_grid_flags(dratio);

  CLI::App* validate = app.add_subcommand("validate", "run the built-in check suite");
  validate->fallthrough();
  validate->add_flag("--quick", quick, "smaller grids, fewer random draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (energy->parsed()) return run_energy(separation, atoms, global);
    if (sweep->parsed()) return run_sweep(grid, atoms, global);
    if (dratio->parsed()) return run_dratio(grid, couplings, global);
    if (validate->parsed()) return run_validate(quick, global);
  } catch (const vdw::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const vdw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
