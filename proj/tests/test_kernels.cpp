#include <fracplap/kernels.hpp>
#include <fracplap/special.hpp>

#include <doctest.h>

#include <cmath>
#include <utility>

using namespace fracplap;

namespace {
QuadConfig tight() {
  QuadConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-12;
  return cfg;
}
} // namespace

TEST_CASE("poisson kernel: spot value and symmetry") {
  const FracParams pr(1, 0.5, 2.0); // sp = 1
  CHECK(poisson_kernel(Vec::d1(0.0), 1.0, pr) ==
        doctest::Approx(1.0 / M_PI).epsilon(1e-13));
  for (double xi : {0.3, 1.7})
    CHECK(poisson_kernel(Vec::d1(xi), 0.8, pr) ==
          doctest::Approx(poisson_kernel(Vec::d1(-xi), 0.8, pr)));
}

TEST_CASE("poisson kernel integrates to one (n = 1)") {
  const QuadConfig cfg = tight();
  for (auto [s, p] : {std::pair{0.25, 1.5}, {0.5, 2.0}, {0.75, 3.0}}) {
    const FracParams pr(1, s, p);
    for (double y : {0.1, 1.0, 10.0}) {
      const QuadResult r = integrate_real_line(
          [&](double x) { return poisson_kernel(Vec::d1(x), y, pr); }, cfg);
      CHECK(std::fabs(r.value - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("poisson kernel integrates to one (n = 2)") {
  const QuadConfig cfg = tight();
  const FracParams pr(2, 0.6, 2.5);
  for (double y : {0.5, 2.0}) {
    // radial: int_0^inf P(r, y) 2 pi r dr
    const Fn1 F = [&](double rho) {
      const double r = std::exp(rho);
      return poisson_kernel(Vec::d2(r, 0.0), y, pr) * 2.0 * M_PI * r * r;
    };
    const QuadResult q = sweep_windows(F, std::log(y), -745.0, 700.0,
                                       cfg.abs_tol, cfg.rel_tol, 4000);
    CHECK(std::fabs(q.value - 1.0) <= 1e-8);
  }
}

TEST_CASE("1-D resolvent profile: closed form matches the quadrature") {
  const QuadConfig cfg = tight();
  double max_diff = 0.0;
  for (double lr = std::log(1e-3); lr <= std::log(20.0); lr += 0.25) {
    const double rho = std::exp(lr);
    const double numeric = resolvent_profile_numeric(1, rho, cfg);
    const double closed = 0.5 * std::exp(-rho);
    max_diff = std::max(max_diff, std::fabs(numeric - closed));
  }
  CHECK(max_diff <= 1e-8);
}

TEST_CASE("profile endpoint values") {
  const ResolventProfile& w1 = ResolventProfile::get(1);
  CHECK(w1(0.0) == doctest::Approx(0.5));
  CHECK(w1(1.0) == doctest::Approx(0.18393972058572116).epsilon(1e-12));
}

TEST_CASE("resolvent kernel mass and monotonicity (n = 1)") {
  const QuadConfig cfg = tight();
  const FracParams pr(1, 0.5, 2.0);
  for (double t : {0.1, 1.0, 10.0}) {
    const QuadResult r = integrate_real_line(
        [&](double x) { return resolvent_kernel(Vec::d1(x), t, pr); }, cfg);
    CHECK(std::fabs(r.value - 1.0) <= 1e-8);
  }
  double prev = resolvent_kernel(Vec::d1(0.0), 2.0, pr);
  for (double x = 0.25; x <= 3.0; x += 0.25) {
    const double v = resolvent_kernel(Vec::d1(x), 2.0, pr);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("2-D profile: cached grid against direct quadrature") {
  const ResolventProfile& w2 = ResolventProfile::get(2);
  const QuadConfig cfg = tight();
  for (double rho : {1e-3, 0.05, 0.4, 1.0, 3.0, 12.0})
    CHECK(w2(rho) ==
          doctest::Approx(resolvent_profile_numeric(2, rho, cfg))
              .epsilon(1e-9));
}

TEST_CASE("resolvent kernel mass (n = 2)") {
  const FracParams pr(2, 0.5, 2.0);
  const double t = 0.7;
  const Fn1 F = [&](double rho) {
    const double r = std::exp(rho);
    return resolvent_kernel(Vec::d2(r, 0.0), t, pr) * 2.0 * M_PI * r * r;
  };
  const QuadResult q =
      sweep_windows(F, std::log(1.0 / std::sqrt(t)), -745.0, 700.0, 1e-12,
                    1e-10, 4000);
  CHECK(std::fabs(q.value - 1.0) <= 1e-7);
}

TEST_CASE("profile moments against the Gamma product") {
  // 2 int_0^inf sigma^{n+sp-1} W dsigma = 2^{sp} pi^{-n/2}
  //   Gamma(1 + sp/2) Gamma((n+sp)/2)
  for (double sp : {0.375, 1.0, 2.25}) {
    const double expect1 = std::pow(2.0, sp) / std::sqrt(M_PI) *
                           gamma_fn(1.0 + 0.5 * sp) *
                           gamma_fn(0.5 * (1.0 + sp));
    CHECK(2.0 * ResolventProfile::get(1).moment_total(1.0 + sp) ==
          doctest::Approx(expect1).epsilon(1e-12));
    const double expect2 = std::pow(2.0, sp) / M_PI *
                           gamma_fn(1.0 + 0.5 * sp) *
                           gamma_fn(0.5 * (2.0 + sp));
    CHECK(2.0 * ResolventProfile::get(2).moment_total(2.0 + sp) ==
          doctest::Approx(expect2).epsilon(1e-7));
  }
}

TEST_CASE("kernel set plumbing") {
  const KernelSet ks = kernel_set(FracParams(1, 0.5, 2.0));
  CHECK(ks.resolvent_closed_form_1d());
  CHECK(ks.heat(Vec::d1(0.0), 0.25) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(ks.profile(1.0) == doctest::Approx(0.5 * std::exp(-1.0)));
}
