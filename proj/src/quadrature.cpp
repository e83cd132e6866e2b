#include "vdw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace vdw {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae/weights from the QUADPACK dqk15 tables.
constexpr int kNodes = 8;  // non-negative abscissae
constexpr double kXgk[kNodes] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[kNodes] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a, b;
  double value;
  double error;
  int depth;
};

double checked_eval(const std::function<double(double)>& f, double t) {
  const double y = f(t);
  if (std::isnan(y))
    throw EvaluationError("integrand returned NaN at t=" + std::to_string(t));
  return y;
}

Panel evaluate_panel(const std::function<double(double)>& g, double a, double b,
                     int depth, long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = checked_eval(g, center);
  double k15 = kWgk[7] * f_center;
  double g7 = kWg[3] * f_center;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double y = checked_eval(g, center - dx) + checked_eval(g, center + dx);
    k15 += kWgk[i] * y;
    if (i % 2 == 1) g7 += kWg[i / 2] * y;
  }
  evaluations += 15;

  Panel p;
  p.a = a;
  p.b = b;
  p.value = k15 * half;
  p.error = std::abs((k15 - g7) * half);
  p.depth = depth;
  return p;
}

double panel_sum(const std::vector<Panel>& panels,
                 double (*pick)(const Panel&)) {
  // Left-to-right summation keeps the result independent of refinement order.
  std::vector<const Panel*> order;
  order.reserve(panels.size());
  for (const auto& p : panels) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const Panel* x, const Panel* y) { return x->a < y->a; });
  double s = 0.0;
  for (const Panel* p : order) s += pick(*p);
  return s;
}

}  // namespace

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a,
                               double b) {
  long n = 0;
  const Panel p = evaluate_panel(f, a, b, 0, n);
  return {p.value, p.error};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double scale_hint,
                                         const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(scale_hint > 0.0) || !std::isfinite(scale_hint))
    throw DomainError("integrate_semi_infinite: scale hint must be positive and finite");

  // u = u0 * t / (1 - t) maps (0,1) -> (0,inf); handles both exponential
  // tails and algebraic decay down to u^-2.
  const double u0 = scale_hint;
  auto g = [&](double t) {
    const double om = 1.0 - t;
    const double u = u0 * t / om;
    return f(u) * u0 / (om * om);
  };

  QuadratureResult result;
  std::vector<Panel> panels;
  panels.reserve(256);

  // A modest initial grid so narrow features away from t=1/2 are not missed.
  constexpr int kInitial = 8;
  double running_value = 0.0;
  double running_error = 0.0;
  for (int i = 0; i < kInitial; ++i) {
    panels.push_back(evaluate_panel(g, i / double(kInitial),
                                    (i + 1) / double(kInitial), 0,
                                    result.evaluations));
    running_value += panels.back().value;
    running_error += panels.back().error;
  }

  constexpr std::size_t kMaxPanels = 5000;
  for (;;) {
    const double allowed =
        std::max(cfg.rel_tol * std::abs(running_value), cfg.abs_tol);
    if (running_error <= allowed) break;

    // Refine the worst refinable panel (leftmost on ties).
    std::size_t worst = panels.size();
    double worst_error = cfg.tail_threshold;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const Panel& p = panels[i];
      if (p.depth >= cfg.max_depth) continue;
      if (p.error > worst_error ||
          (p.error == worst_error && worst < panels.size() &&
           p.a < panels[worst].a)) {
        worst = i;
        worst_error = p.error;
      }
    }
    if (worst == panels.size() || panels.size() + 1 > kMaxPanels) break;

    const Panel old = panels[worst];
    const double mid = 0.5 * (old.a + old.b);
    panels[worst] = evaluate_panel(g, old.a, mid, old.depth + 1, result.evaluations);
    panels.push_back(evaluate_panel(g, mid, old.b, old.depth + 1, result.evaluations));
    running_value += panels[worst].value + panels.back().value - old.value;
    running_error += panels[worst].error + panels.back().error - old.error;
  }

  // Canonical left-to-right sums, independent of the refinement history.
  result.value = panel_sum(panels, [](const Panel& p) { return p.value; });
  result.error_estimate = panel_sum(panels, [](const Panel& p) { return p.error; });
  result.converged =
      result.error_estimate <=
      std::max(cfg.rel_tol * std::abs(result.value), cfg.abs_tol);
  return result;
}

}  // namespace vdw
