#include <fracplap/errors.hpp>
#include <fracplap/spectral.hpp>

#include <doctest.h>

#include <cmath>

using namespace fracplap;

namespace {
QuadConfig cfg6() {
  QuadConfig cfg;
  cfg.rel_tol = 1e-6;
  cfg.abs_tol = 1e-10;
  return cfg;
}
} // namespace

TEST_CASE("dirichlet kernel: series and images paths coincide") {
  const Interval dom{4.0};
  for (double t : {0.05, 0.12, 0.3})
    for (double x : {0.7, 2.0})
      for (double y : {0.4, 1.9, 3.3}) {
        // below/above the internal switch both forms are valid
        double series = 0.0;
        for (int k = 1; k <= 400; ++k) {
          const double kk = k * M_PI / dom.length;
          series += 2.0 / dom.length * std::exp(-kk * kk * t) *
                    std::sin(kk * x) * std::sin(kk * y);
        }
        CHECK(dirichlet_heat_kernel(t, x, y, dom, 1e-12) ==
              doctest::Approx(series).epsilon(1e-9));
      }
}

TEST_CASE("dirichlet heat: eigenfunction decay") {
  const Interval dom{4.0};
  const QuadConfig cfg = cfg6();
  const double k1 = M_PI / dom.length;
  for (double t : {0.2, 1.0, 3.0}) {
    const double v = dirichlet_heat_apply(
        [&](double y) { return std::sin(k1 * y); }, 1.3, t, dom, cfg);
    CHECK(v == doctest::Approx(std::exp(-dom.lambda1() * t) *
                               std::sin(k1 * 1.3))
                   .epsilon(1e-8));
  }
  // Dirichlet decay of the constant initial datum
  const double late = dirichlet_heat_apply([](double) { return 1.0; }, 2.0,
                                           40.0, dom, cfg);
  CHECK(std::fabs(late) <= 1e-9);
}

TEST_CASE("kernel domination and mass deficit") {
  const Interval dom{4.0};
  for (double t : {0.05, 0.5, 2.0})
    for (double x : {0.5, 2.0, 3.1}) {
      for (double y : {0.3, 1.7, 3.6}) {
        const double kd = dirichlet_heat_kernel(t, x, y, dom, 1e-12);
        const double kf = std::exp(-(x - y) * (x - y) / (4.0 * t)) /
                          std::sqrt(4.0 * M_PI * t);
        CHECK(kd >= -1e-12);
        CHECK(kd <= kf + 1e-12);
      }
      const QuadConfig cfg = cfg6();
      const double mass = dirichlet_heat_apply([](double) { return 1.0; }, x,
                                               t, dom, cfg);
      CHECK(mass <= 1.0 + 1e-9);
    }
  // mass decreasing in t
  const QuadConfig cfg = cfg6();
  double prev = 1.0;
  for (double t : {0.1, 0.5, 1.5, 4.0}) {
    const double mass =
        dirichlet_heat_apply([](double) { return 1.0; }, 1.0, t, Interval{4.0},
                             cfg);
    CHECK(mass < prev);
    prev = mass;
  }
}

TEST_CASE("spectral operator: constants map to zero") {
  TestFunction constant;
  constant.n = 1;
  constant.name = "constant";
  constant.value = [](const Vec&) { return 2.0; };
  constant.gradient = [](const Vec& x) { return Vec::zero(x.n); };
  constant.hessian = [](const Vec& x) {
    Mat m;
    m.n = x.n;
    return m;
  };
  constant.sup_norm = 2.0;
  const EvalResult r = eval_spectral(constant, 2.0, FracParams(1, 0.5, 2.0),
                                     Interval{4.0}, cfg6());
  CHECK(std::fabs(r.value) <= 1e-9);
}

TEST_CASE("spectral is below restricted for a centered decreasing bump") {
  const Interval dom{4.0};
  const TestFunction u = bump_function(2.0, 1.5);
  for (double p : {2.0, 3.0}) {
    const FracParams params(1, 0.5, p);
    const EvalResult spec = eval_spectral(u, 2.0, params, dom, cfg6());
    const EvalResult restr = eval_restricted(u, 2.0, params, dom, cfg6());
    CHECK(restr.value - spec.value > 0.0);
    CHECK(spec.value > 0.0);
  }
}

TEST_CASE("reflection symmetry of the inner integrand at the midpoint") {
  // u symmetric about L/2 evaluated at L/2: reflecting the function about
  // the midpoint leaves the spectral value unchanged
  const Interval dom{4.0};
  const TestFunction u = bump_function(2.0, 1.2);
  TestFunction mirrored = u;
  mirrored.value = [&u, &dom](const Vec& x) {
    return u.value(Vec::d1(dom.length - x[0]));
  };
  mirrored.gradient = [&u, &dom](const Vec& x) {
    Vec g = u.gradient(Vec::d1(dom.length - x[0]));
    g[0] = -g[0];
    return g;
  };
  mirrored.hessian = [&u, &dom](const Vec& x) {
    return u.hessian(Vec::d1(dom.length - x[0]));
  };
  const FracParams params(1, 0.5, 3.0);
  const double a = eval_spectral(u, 2.0, params, dom, cfg6()).value;
  const double b = eval_spectral(mirrored, 2.0, params, dom, cfg6()).value;
  CHECK(a == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("spectral approaches the whole-space operator as L grows") {
  const FracParams params(1, 0.5, 2.0);
  const QuadConfig cfg = cfg6();
  double prev_gap = 1e18;
  for (double L : {4.0, 8.0, 16.0}) {
    const TestFunction u = bump_function(0.5 * L, 1.5);
    const double whole = eval_direct(u, Vec::d1(0.5 * L), params, cfg).value;
    const double spec =
        eval_spectral(u, 0.5 * L, params, Interval{L}, cfg).value;
    const double gap = std::fabs(whole - spec);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("restricted operator on a constant: closed-form tail integral") {
  // u == c on (0, L), zero outside; at interior x the direct operator sees
  // only the exterior, giving c^{p-1} C1 (x^{-sp} + (L-x)^{-sp}) / sp.
  // The zero extension is discontinuous, so this runs in the explicit
  // principal-value cutoff mode (a boundary-regularity stress test).
  const Interval dom{4.0};
  const double c = 0.8, x = 1.5;
  TestFunction constant;
  constant.n = 1;
  constant.name = "constant";
  constant.value = [c](const Vec&) { return c; };
  constant.gradient = [](const Vec& xv) { return Vec::zero(xv.n); };
  constant.hessian = [](const Vec& xv) {
    Mat m;
    m.n = xv.n;
    return m;
  };
  constant.sup_norm = c;
  const FracParams params(1, 0.5, 2.0);
  QuadConfig cfg = cfg6();
  cfg.epsilon_pv = 1e-3;
  const EvalResult r = eval_restricted(constant, x, params, dom, cfg);
  const double expect = c * c1(params) *
                        (std::pow(x, -params.sp) +
                         std::pow(dom.length - x, -params.sp)) /
                        params.sp;
  CHECK(r.value == doctest::Approx(expect).epsilon(1e-5));
  // the spectral value of the same constant is 0, the restricted one is not
  CHECK(r.value > 0.1);
}

TEST_CASE("spectral rejects points outside the domain") {
  const TestFunction u = bump_function(2.0, 1.0);
  CHECK_THROWS_AS(
      eval_spectral(u, 5.0, FracParams(1, 0.5, 2.0), Interval{4.0}, cfg6()),
      ConfigError);
}
