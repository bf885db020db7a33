#pragma once

#include <fracplap/params.hpp>
#include <fracplap/point.hpp>
#include <fracplap/quad.hpp>

#include <memory>
#include <vector>

namespace fracplap {

/// Poisson kernel of the (s,p) extension problem:
/// P(xi, y) = Gamma((n+sp)/2) / (pi^{n/2} Gamma(sp/2)) *
///            y^{sp} / (|xi|^2 + y^2)^{(n+sp)/2},  y > 0.
double poisson_kernel(const Vec& xi, double y, const FracParams& params);

/// Whole-space heat kernel G(t, z) = (4 pi t)^{-n/2} e^{-|z|^2/(4t)}.
double heat_kernel(const Vec& z, double t);

/// Radial profile W of the resolvent kernel: R_t(x) = t^{n/2} W(sqrt(t)|x|).
/// n = 1 uses the closed form e^{-rho}/2; n = 2 a cached numerical grid.
class ResolventProfile {
public:
  static const ResolventProfile& get(int n);

  double operator()(double rho) const;
  int dim() const { return n_; }

  /// M(rho) = int_0^rho sigma^{a-1} W(sigma) dsigma and its limit M(inf).
  /// Used by the small-t half of the Balakrishnan representation.
  double moment(double a, double rho) const;
  double moment_total(double a) const;

private:
  explicit ResolventProfile(int n);
  int n_;
  // n = 2 grid, uniform in log(rho)
  double lrho_min_ = 0.0, lrho_max_ = 0.0, dl_ = 0.0;
  std::vector<double> w_;
};

/// Direct quadrature of the self-similar profile integral
/// W(rho) = rho^{2-n} (4 pi)^{-n/2} int_0^inf e^{-rho^2 w} w^{-n/2}
///          e^{-1/(4w)} dw, used to verify the closed forms and the cache.
double resolvent_profile_numeric(int n, double rho, const QuadConfig& cfg);

/// R_t(x) = t^{n/2} W(sqrt(t)|x|), the kernel of t(t-Delta)^{-1}.
double resolvent_kernel(const Vec& x, double t, const FracParams& params);

/// Kernel bundle for a parameter set, as consumed by the representations.
struct KernelSet {
  FracParams params;

  double poisson(const Vec& xi, double y) const {
    return poisson_kernel(xi, y, params);
  }
  double heat(const Vec& z, double t) const { return heat_kernel(z, t); }
  double resolvent(const Vec& x, double t) const {
    return resolvent_kernel(x, t, params);
  }
  double profile(double rho) const {
    return ResolventProfile::get(params.n)(rho);
  }
  bool resolvent_closed_form_1d() const { return params.n == 1; }
};

inline KernelSet kernel_set(const FracParams& params) {
  return KernelSet{params};
}

} // namespace fracplap
