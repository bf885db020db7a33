#pragma once

#include <fracplap/point.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace fracplap {

/// Tolerances and discretization knobs shared by all quadratures.
struct QuadConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  int max_subdivisions = 2000;
  int hermite_nodes = 64;
  double tail_radius = 40.0; // truncation scale hint for outer integrals
  double t_split = 1.0;      // split point of singular time integrals
  double y0 = 0.5;           // extension limit: first height of the sequence
  double y_ratio = 0.5;      // geometric ratio, in (0,1)
  int y_count = 12;
  double epsilon_pv = 0.0;   // >0: explicit principal-value cutoff

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

using Fn1 = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 7-15 on a finite interval.
QuadResult integrate_interval(const Fn1& f, double a, double b, double abs_tol,
                              double rel_tol, int max_subdivisions);

/// Same, pre-split at the given interior points (narrow features the
/// initial rule would otherwise step over).
QuadResult integrate_interval_pts(const Fn1& f, double a, double b,
                                  const std::vector<double>& interior,
                                  double abs_tol, double rel_tol,
                                  int max_subdivisions);

/// Windowed sweep of int F(tau) dtau over (lo, hi), walking fixed-width
/// windows outward from tau0 in both directions until contributions die out.
/// Windows containing a focus point are pre-split there.
/// Throws DivergenceError when window contributions grow without bound.
QuadResult sweep_windows(const Fn1& F, double tau0, double lo, double hi,
                         double abs_tol, double rel_tol, int max_subdivisions,
                         const std::vector<double>* focus = nullptr,
                         int max_leading_zeros = 80);

/// int_0^inf f(t) dt / t^{1+alpha} via the substitution t = e^tau.
QuadResult integrate_time_singular(const Fn1& f, double alpha,
                                   const QuadConfig& cfg);

/// Same with the lower limit t_lo > 0 (delta-regularized weights).
QuadResult integrate_time_singular_from(const Fn1& f, double alpha,
                                        double t_lo, const QuadConfig& cfg);

/// int_0^inf g(r) dr / r^{1+sp} for a symmetrized radial numerator g.
/// With cfg.epsilon_pv > 0 the integral starts at epsilon_pv instead of 0.
QuadResult integrate_radial_symmetrized(const Fn1& g, double sp, int n,
                                        const QuadConfig& cfg);

/// int_{-inf}^{inf} f(x) dx with log-windowed tails.
QuadResult integrate_real_line(const Fn1& f, const QuadConfig& cfg);

/// Gauss-Hermite rule for the weight e^{-r^2} (nodes ascending).
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<std::pair<double, double>> pairs; // (r > 0, weight), symmetric
  double center_weight = 0.0;                   // present for odd node counts
};

/// Cached rule; thread-safe.
const HermiteRule& hermite_rule(int count);

/// Heat semigroup e^{tDelta}[f](x) by Gauss-Hermite after y = x + 2 sqrt(t) r,
/// tensorized for n = 2.
double heat_apply(const std::function<double(const Vec&)>& f, const Vec& x,
                  double t, const QuadConfig& cfg);

} // namespace fracplap
