#pragma once

#include <fracplap/point.hpp>

#include <functional>
#include <string>

namespace fracplap {

/// The odd power nonlinearity Phi_p(t) = |t|^{p-2} t, continuous at 0 for p > 1.
inline double phi_p(double t, double p) {
  if (t == 0.0)
    return 0.0;
  return std::copysign(std::pow(std::fabs(t), p - 1.0), t);
}

/// An analytic C^2_b test function with closed-form derivatives and
/// (where available) a closed-form heat-semigroup image.
struct TestFunction {
  std::string name;
  int n = 1;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  std::function<Mat(const Vec&)> hessian;
  double sup_norm = 1.0;
  double grad_sup_norm = 1.0;
  double hess_sup_norm = 1.0;
  std::function<double(const Vec&, double)> heat_closed_form; // may be empty
  double tail_radius = 40.0; // scale beyond which |u| is negligible / tail-like
  double period = 0.0;       // exact period along e1 (0: not periodic)
  Vec center = Vec::d1(0.0); // where the mass sits (quadrature focus hint)
  double support_radius = 1e300; // effective support around center
};

/// Catalog lookup: gaussian, cosine, rational_bump, shifted_gaussian, bump.
/// Throws ConfigError for unknown names.
TestFunction catalog(const std::string& name, int n);

/// exp(-|x - x0|^2) with configurable center.
TestFunction shifted_gaussian(const Vec& x0);

/// 1-D C^2 compactly supported bump (1 - ((x-c)/R)^2)^3 on |x-c| < R.
TestFunction bump_function(double center, double radius);

/// h * u
TestFunction scaled(const TestFunction& u, double h);
/// u(h * .)
TestFunction dilated(const TestFunction& u, double h);
/// u(. - a)
TestFunction translated(const TestFunction& u, const Vec& a);

/// Closed-form heat image e^{tDelta}u(x); throws if u has none.
double heat_apply_closed_form(const TestFunction& u, const Vec& x, double t);

/// 1-D p-Laplacian Delta_p u(x) = (p-1)|u'(x)|^{p-2} u''(x).
/// Signals a degenerate point when p < 2 and u'(x) = 0.
double p_laplacian_1d(const TestFunction& u, double x, double p);

} // namespace fracplap
