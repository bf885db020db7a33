#include <fracplap/kernels.hpp>

#include <fracplap/errors.hpp>
#include <fracplap/special.hpp>

#include <cmath>
#include <mutex>

namespace fracplap {

double poisson_kernel(const Vec& xi, double y, const FracParams& params) {
  if (!(y > 0.0))
    throw ConfigError("poisson_kernel: requires y > 0");
  const double a = 0.5 * (params.n + params.sp);
  const double lcoef = log_abs_gamma(a) - 0.5 * params.n * std::log(M_PI) -
                       log_abs_gamma(0.5 * params.sp);
  return std::exp(lcoef + params.sp * std::log(y) -
                  a * std::log(xi.norm2() + y * y));
}

double heat_kernel(const Vec& z, double t) {
  return std::pow(4.0 * M_PI * t, -0.5 * z.n) * std::exp(-z.norm2() / (4.0 * t));
}

double resolvent_profile_numeric(int n, double rho, const QuadConfig& cfg) {
  if (!(rho > 0.0))
    throw ConfigError("resolvent_profile_numeric: requires rho > 0");
  // integrand has two exponential cutoffs; sweep log-windows around the
  // scale where both are mild
  const double half_n = 0.5 * n;
  const Fn1 F = [rho, half_n](double v) {
    const double w = std::exp(v);
    return std::exp(-rho * rho * w - 0.25 / w + (1.0 - half_n) * v);
  };
  const double v0 = std::log(0.5 / std::max(rho, 1e-8));
  QuadResult r = sweep_windows(F, v0, -745.0, 700.0, cfg.abs_tol * 1e-3,
                               cfg.rel_tol * 1e-3, cfg.max_subdivisions);
  return std::pow(rho, 2.0 - n) * std::pow(4.0 * M_PI, -half_n) * r.value;
}

ResolventProfile::ResolventProfile(int n) : n_(n) {
  if (n == 1)
    return;
  // cache W on a log-spaced grid; W has a log singularity at 0 in n = 2,
  // which is mild in log coordinates
  const int count = 6000;
  lrho_min_ = std::log(1e-6);
  lrho_max_ = std::log(60.0);
  dl_ = (lrho_max_ - lrho_min_) / (count - 1);
  w_.resize(count);
  QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  cfg.rel_tol = 1e-11;
  for (int i = 0; i < count; ++i)
    w_[i] = resolvent_profile_numeric(n_, std::exp(lrho_min_ + i * dl_), cfg);
}

const ResolventProfile& ResolventProfile::get(int n) {
  if (n != 1 && n != 2)
    throw ConfigError("ResolventProfile: only n in {1,2}");
  static std::once_flag once1, once2;
  static std::unique_ptr<ResolventProfile> p1, p2;
  if (n == 1) {
    std::call_once(once1, [] { p1.reset(new ResolventProfile(1)); });
    return *p1;
  }
  std::call_once(once2, [] { p2.reset(new ResolventProfile(2)); });
  return *p2;
}

double ResolventProfile::operator()(double rho) const {
  if (n_ == 1)
    return 0.5 * std::exp(-rho);
  if (rho <= 0.0)
    throw ConfigError("ResolventProfile: rho must be positive in n = 2");
  const double l = std::log(rho);
  if (l >= lrho_max_)
    return 0.0; // W(60) ~ e^-60, below any tolerance in use
  if (l <= lrho_min_) {
    // logarithmic continuation below the grid (W ~ -log(rho)/(2 pi))
    const double slope = (w_[1] - w_[0]) / dl_;
    return w_[0] + slope * (l - lrho_min_);
  }
  const int i = std::min(static_cast<int>((l - lrho_min_) / dl_),
                         static_cast<int>(w_.size()) - 2);
  const double u = (l - (lrho_min_ + i * dl_)) / dl_;
  // Catmull-Rom in log(rho)
  const double y0 = w_[std::max(i - 1, 0)];
  const double y1 = w_[i];
  const double y2 = w_[i + 1];
  const double y3 = w_[std::min(i + 2, static_cast<int>(w_.size()) - 1)];
  const double a0 = -0.5 * y0 + 1.5 * y1 - 1.5 * y2 + 0.5 * y3;
  const double a1 = y0 - 2.5 * y1 + 2.0 * y2 - 0.5 * y3;
  const double a2 = -0.5 * y0 + 0.5 * y2;
  return ((a0 * u + a1) * u + a2) * u + y1;
}

double ResolventProfile::moment(double a, double rho) const {
  if (rho <= 0.0)
    return 0.0;
  if (n_ == 1)
    return 0.5 * gamma_lower(a, rho);
  const ResolventProfile& self = *this;
  const Fn1 F = [&self, a](double l) {
    const double sigma = std::exp(l);
    return self(sigma) * std::exp(a * l);
  };
  QuadResult r = sweep_windows(F, std::min(std::log(rho), 0.0) - 1e-12,
                               -745.0, std::log(rho), 1e-13, 1e-12, 4000);
  return r.value;
}

double ResolventProfile::moment_total(double a) const {
  if (n_ == 1)
    return 0.5 * gamma_fn(a);
  return moment(a, 60.0);
}

double resolvent_kernel(const Vec& x, double t, const FracParams& params) {
  if (!(t > 0.0))
    throw ConfigError("resolvent_kernel: requires t > 0");
  if (x.n != params.n)
    throw ConfigError("resolvent_kernel: dimension mismatch");
  const double rho = std::sqrt(t) * x.norm();
  if (params.n == 1)
    return 0.5 * std::sqrt(t) * std::exp(-rho);
  return t * ResolventProfile::get(2)(std::max(rho, 1e-300));
}

} // namespace fracplap
