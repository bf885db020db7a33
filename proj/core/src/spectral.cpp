#include <fracplap/spectral.hpp>

#include <fracplap/constants.hpp>
#include <fracplap/errors.hpp>

#include <cmath>

namespace fracplap {

namespace {

double gauss_1d(double t, double z) {
  return std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
}

// series truncation needed to push the eigenvalue tail under tol
int series_terms(double t, double L, double tol) {
  const double lg = std::log(std::max(4.0 / (L * tol), 10.0));
  return static_cast<int>(std::ceil(L / (M_PI * std::sqrt(t)) *
                                    std::sqrt(lg))) + 1;
}

double kernel_series(double t, double x, double y, const Interval& dom,
                     double tol) {
  const double L = dom.length;
  const int M = std::min(series_terms(t, L, tol), dom.eigen_count);
  double acc = 0.0;
  for (int k = 1; k <= M; ++k) {
    const double kk = k * M_PI / L;
    acc += std::exp(-kk * kk * t) * std::sin(kk * x) * std::sin(kk * y);
  }
  return 2.0 / L * acc;
}

double kernel_images(double t, double x, double y, const Interval& dom,
                     double tol) {
  const double L = dom.length;
  double acc = 0.0;
  for (int m = -32; m <= 32; ++m) {
    const double direct = gauss_1d(t, x - y - 2.0 * m * L);
    const double mirror = gauss_1d(t, x + y - 2.0 * m * L);
    acc += direct - mirror;
    if (m > 0) {
      const double reach = 2.0 * (m - 1) * L; // closest distance at level m+1
      if (gauss_1d(t, reach) < tol * 1e-3 && m >= 2)
        break;
    }
  }
  return acc;
}

} // namespace

double dirichlet_heat_kernel(double t, double x, double y, const Interval& dom,
                             double abs_tol) {
  if (!(t > 0.0))
    throw ConfigError("dirichlet_heat_kernel: requires t > 0");
  if (series_terms(t, dom.length, abs_tol) <= 48)
    return kernel_series(t, x, y, dom, abs_tol);
  return kernel_images(t, x, y, dom, abs_tol);
}

double dirichlet_heat_apply(const std::function<double(double)>& f, double x,
                            double t, const Interval& dom,
                            const QuadConfig& cfg) {
  const Fn1 g = [&](double y) {
    return dirichlet_heat_kernel(t, x, y, dom, cfg.abs_tol * 0.01) * f(y);
  };
  return integrate_interval(g, 0.0, dom.length, cfg.abs_tol, cfg.rel_tol,
                            cfg.max_subdivisions)
      .value;
}

namespace {

// mirror-image loop bounded by reach; m = 0 excluded (handled separately)
double images_correction(const DifferencePairs& v, double x, double t,
                         const Interval& dom, const QuadConfig& cfg) {
  const double L = dom.length;
  const Vec xv = Vec::d1(x);
  // G_free - K_Omega on (0, L): the m = 0 mirror plus all |m| >= 1 images,
  // every term smooth in y inside the interval
  const Fn1 diff = [&](double y) {
    double acc = gauss_1d(t, x + y); // m = 0 mirror
    for (int m = 1; m <= 8; ++m) {
      acc += gauss_1d(t, x + y - 2.0 * m * L) - gauss_1d(t, x - y - 2.0 * m * L);
      acc += gauss_1d(t, x + y + 2.0 * m * L) - gauss_1d(t, x - y + 2.0 * m * L);
    }
    const double ux = v.value_at_x();
    const double uy = v.u().value(Vec::d1(y));
    return acc * phi_p(ux - uy, v.p());
  };
  (void)xv;
  // largest image magnitude on the interval
  const double d0 = std::min(x, L - x);
  const double peak = gauss_1d(t, 2.0 * d0 <= L ? 2.0 * d0 : L);
  if (peak * v.sup_ring() * L < cfg.abs_tol * 1e-3)
    return 0.0;
  return integrate_interval(diff, 0.0, L, cfg.abs_tol * 0.01, cfg.rel_tol,
                            cfg.max_subdivisions)
      .value;
}

// e^{t Delta_Omega}[v](x) for the Dirichlet semigroup, stable as t -> 0.
double dirichlet_heat_centered(const DifferencePairs& v, double x, double t,
                               const Interval& dom, const QuadConfig& cfg) {
  const double L = dom.length;
  const double tol0 = cfg.abs_tol * 0.01;
  if (series_terms(t, L, tol0) <= 24) {
    // sine series on the value function directly
    const int M = std::min(series_terms(t, L, tol0), dom.eigen_count);
    const double ux = v.value_at_x();
    const auto& u = v.u();
    const double p = v.p();
    double acc = 0.0;
    for (int k = 1; k <= M; ++k) {
      const double kk = k * M_PI / L;
      const Fn1 g = [&](double y) {
        return std::sin(kk * y) * phi_p(ux - u.value(Vec::d1(y)), p);
      };
      const double bk = integrate_interval(g, 0.0, L, tol0, cfg.rel_tol,
                                           cfg.max_subdivisions)
                            .value;
      acc += std::exp(-kk * kk * t) * std::sin(kk * x) * bk;
    }
    return 2.0 / L * acc;
  }
  // images regime: free part over the centered span (stable pair sums),
  // plus the strip the pairs missed, minus the image correction
  const double d0 = std::min(x, L - x);
  const double w = 2.0 * std::sqrt(t);
  const Vec e1 = Vec::d1(1.0);
  const Fn1 central = [&](double rho) {
    return std::exp(-rho * rho) * v.pair_sum(e1, w * rho);
  };
  const double rho_max = std::min(d0 / w, 9.0);
  double acc = integrate_interval(central, 0.0, rho_max, tol0, cfg.rel_tol,
                                  cfg.max_subdivisions)
                   .value /
               std::sqrt(M_PI);
  // one-sided remainder strips (0, x-d0] and [x+d0, L)
  const double ux = v.value_at_x();
  const auto& u = v.u();
  const double p = v.p();
  const Fn1 strip = [&](double y) {
    return gauss_1d(t, x - y) * phi_p(ux - u.value(Vec::d1(y)), p);
  };
  const double span = w * rho_max;
  if (x - span > 1e-14 * L)
    acc += integrate_interval(strip, 0.0, x - span, tol0, cfg.rel_tol,
                              cfg.max_subdivisions)
               .value;
  if (x + span < L * (1.0 - 1e-14))
    acc += integrate_interval(strip, x + span, L, tol0, cfg.rel_tol,
                              cfg.max_subdivisions)
               .value;
  return acc - images_correction(v, x, t, dom, cfg);
}

} // namespace

EvalResult eval_spectral(const TestFunction& u, double x,
                         const FracParams& params, const Interval& dom,
                         const QuadConfig& cfg) {
  cfg.validate();
  if (params.n != 1 || u.n != 1)
    throw ConfigError("eval_spectral: the domain operator is built in 1-D");
  if (!(x > 0.0 && x < dom.length))
    throw ConfigError("eval_spectral: x must lie inside (0, L)");
  DifferencePairs v(u, Vec::d1(x), params.p, PairKind::odd_power);
  check_hypotheses(v, params);
  const double sp = params.sp;
  const Fn1 F = [&](double tau) {
    const double t = std::exp(tau);
    const double h = dirichlet_heat_centered(v, x, t, dom, cfg);
    if (h == 0.0)
      return 0.0;
    return h * std::exp(-0.5 * sp * tau);
  };
  const double t_mid = std::min(1.0, 0.25 * (dom.length / M_PI) *
                                         (dom.length / M_PI));
  QuadResult q = sweep_windows(F, std::log(t_mid), -745.0, 700.0, cfg.abs_tol,
                               cfg.rel_tol, cfg.max_subdivisions);
  const double c = constant_set(params).c2;
  return {c * q.value, c * (q.error + 1e-9 * std::fabs(q.value))};
}

TestFunction restrict_to_interval(const TestFunction& u, const Interval& dom) {
  if (u.n != 1)
    throw ConfigError("restrict_to_interval: requires n = 1");
  TestFunction f = u;
  f.name = u.name + "_restricted";
  const double L = dom.length;
  auto val = u.value;
  auto grad = u.gradient;
  auto hess = u.hessian;
  f.value = [val, L](const Vec& x) {
    return (x[0] > 0.0 && x[0] < L) ? val(x) : 0.0;
  };
  f.gradient = [grad, L](const Vec& x) {
    return (x[0] > 0.0 && x[0] < L) ? grad(x) : Vec::zero(x.n);
  };
  f.hessian = [hess, L](const Vec& x) {
    if (x[0] > 0.0 && x[0] < L)
      return hess(x);
    Mat m;
    m.n = x.n;
    return m;
  };
  f.heat_closed_form = nullptr;
  f.tail_radius = L;
  return f;
}

EvalResult eval_restricted(const TestFunction& u, double x,
                           const FracParams& params, const Interval& dom,
                           const QuadConfig& cfg) {
  if (!(x > 0.0 && x < dom.length))
    throw ConfigError("eval_restricted: x must lie inside (0, L)");
  TestFunction zero_ext = restrict_to_interval(u, dom);
  return eval_direct(zero_ext, Vec::d1(x), params, cfg);
}

} // namespace fracplap
