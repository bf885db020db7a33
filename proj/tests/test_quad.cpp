#include <fracplap/errors.hpp>
#include <fracplap/funcs.hpp>
#include <fracplap/quad.hpp>
#include <fracplap/special.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fracplap;

namespace {
QuadConfig tight() {
  QuadConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-12;
  return cfg;
}
} // namespace

TEST_CASE("QuadConfig validation") {
  QuadConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.hermite_nodes = 4;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = QuadConfig{};
  cfg.y_ratio = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("time-singular integral reduces to Gamma") {
  const QuadConfig cfg = tight();
  // int_0^inf e^{-t} t^{a-1} dt with alpha = -a
  for (double a : {0.5, 1.5, 3.0}) {
    const QuadResult r = integrate_time_singular(
        [](double t) { return std::exp(-t); }, -a, cfg);
    CHECK(r.value == doctest::Approx(gamma_fn(a)).epsilon(1e-9));
    CHECK(std::fabs(r.value - gamma_fn(a)) <= std::max(r.error, 1e-12));
  }
  // at a = 1.5 the value is sqrt(pi)/2
  const QuadResult r = integrate_time_singular(
      [](double t) { return std::exp(-t); }, -1.5, cfg);
  CHECK(r.value == doctest::Approx(0.88622692545275801).epsilon(1e-10));
}

TEST_CASE("time-singular integral of e^{-1/(4t)}: 4^a Gamma(a)") {
  const QuadConfig cfg = tight();
  for (double a : {0.25, 0.5, 0.8}) {
    const QuadResult r = integrate_time_singular(
        [](double t) { return std::exp(-0.25 / t); }, a, cfg);
    CHECK(r.value ==
          doctest::Approx(std::pow(4.0, a) * gamma_fn(a)).epsilon(1e-9));
  }
  const QuadResult r = integrate_time_singular(
      [](double t) { return std::exp(-0.25 / t); }, 0.5, cfg);
  CHECK(r.value == doctest::Approx(3.5449077018110320546).epsilon(1e-10));
}

TEST_CASE("time-singular integral of zero is zero") {
  const QuadResult r =
      integrate_time_singular([](double) { return 0.0; }, 0.5, tight());
  CHECK(r.value == 0.0);
}

TEST_CASE("Bochner constant: int (1-e^{-t}) dt/t^{1+s} = |Gamma(-s)|") {
  const QuadConfig cfg = tight();
  for (double s : {0.25, 0.5, 0.75, 0.9}) {
    const QuadResult r = integrate_time_singular(
        [](double t) { return -std::expm1(-t); }, s, cfg);
    CHECK(r.value ==
          doctest::Approx(std::fabs(gamma_fn(-s))).epsilon(1e-9));
  }
}

TEST_CASE("truncated lower limit (delta-regularized form)") {
  const QuadConfig cfg = tight();
  // int_delta^inf e^{-t} dt/t^{1/2} = Gamma(1/2) - gamma_lower(1/2, delta)
  const double delta = 0.35;
  const QuadResult r = integrate_time_singular_from(
      [](double t) { return std::exp(-t); }, -0.5, delta, cfg);
  CHECK(r.value ==
        doctest::Approx(gamma_fn(0.5) - gamma_lower(0.5, delta))
            .epsilon(1e-10));
}

TEST_CASE("time-singular integral is linear in f") {
  const QuadConfig cfg = tight();
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 4; ++trial) {
    const double a = coef(rng), b = coef(rng);
    auto f1 = [](double t) { return -std::expm1(-t); };
    auto f2 = [](double t) { return t * std::exp(-2.0 * t); };
    const double alpha = 0.4;
    const double lhs =
        integrate_time_singular(
            [&](double t) { return a * f1(t) + b * f2(t); }, alpha, cfg)
            .value;
    const double rhs = a * integrate_time_singular(f1, alpha, cfg).value +
                       b * integrate_time_singular(f2, alpha, cfg).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("radial symmetrized quadrature: Gamma reduction") {
  const QuadConfig cfg = tight();
  // g(r) = r^p e^{-r}, sp = 1: int r^{p-1-sp} e^{-r} dr = Gamma(p - sp)
  const double p = 2.0, sp = 1.0;
  const QuadResult r = integrate_radial_symmetrized(
      [p](double rr) { return std::pow(rr, p) * std::exp(-rr); }, sp, 1, cfg);
  CHECK(r.value == doctest::Approx(gamma_fn(p - sp)).epsilon(1e-9));
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));

  const QuadResult z =
      integrate_radial_symmetrized([](double) { return 0.0; }, 0.5, 1, cfg);
  CHECK(z.value == 0.0);
}

TEST_CASE("radial quadrature flags non-integrable singularities") {
  QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-8;
  // g ~ r^{0.1} against r^{-1-0.5}: divergent at 0
  CHECK_THROWS_AS(integrate_radial_symmetrized(
                      [](double r) { return std::pow(r, 0.1) * std::exp(-r); },
                      0.5, 1, cfg),
                  DivergenceError);
}

TEST_CASE("epsilon cutoff variant") {
  QuadConfig cfg = tight();
  cfg.epsilon_pv = 0.5;
  // int_eps^inf r^{-1-sp} dr = eps^{-sp}/sp for g == 1
  const double sp = 0.8;
  const QuadResult r = integrate_radial_symmetrized(
      [](double) { return 1.0; }, sp, 1, cfg);
  CHECK(r.value ==
        doctest::Approx(std::pow(0.5, -sp) / sp).epsilon(1e-9));
}

TEST_CASE("heat_apply: mass, eigenfunction, closed form") {
  QuadConfig cfg;
  CHECK(heat_apply([](const Vec&) { return 1.0; }, Vec::d1(0.3), 0.7, cfg) ==
        doctest::Approx(1.0).epsilon(1e-13));
  const TestFunction cosine = catalog("cosine", 1);
  CHECK(heat_apply([&](const Vec& y) { return cosine.value(y); }, Vec::d1(0.0),
                   1.0, cfg) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  const TestFunction gauss = catalog("gaussian", 1);
  CHECK(heat_apply([&](const Vec& y) { return gauss.value(y); }, Vec::d1(0.0),
                   0.25, cfg) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  // n = 2 tensorized
  const TestFunction gauss2 = catalog("gaussian", 2);
  CHECK(heat_apply([&](const Vec& y) { return gauss2.value(y); },
                   Vec::d2(0.2, -0.1), 0.3, cfg) ==
        doctest::Approx(heat_apply_closed_form(gauss2, Vec::d2(0.2, -0.1), 0.3))
            .epsilon(1e-11));
}

TEST_CASE("hermite refinement moves toward the closed form") {
  const TestFunction gauss = catalog("gaussian", 1);
  const Vec x = Vec::d1(0.4);
  const double t = 0.35;
  const double exact = heat_apply_closed_form(gauss, x, t);
  double prev_err = 1e9;
  for (int nodes : {32, 64, 128}) {
    QuadConfig cfg;
    cfg.hermite_nodes = nodes;
    const double err = std::fabs(
        heat_apply([&](const Vec& y) { return gauss.value(y); }, x, t, cfg) -
        exact);
    CHECK(err <= prev_err + 1e-15);
    prev_err = err;
  }
  CHECK(prev_err <= 1e-12);
}

TEST_CASE("real-line integral of the gaussian") {
  const QuadResult r = integrate_real_line(
      [](double x) { return std::exp(-x * x); }, tight());
  CHECK(r.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("interval quadrature error estimates bound the true error") {
  const QuadResult r = integrate_interval(
      [](double x) { return std::sin(3.0 * x); }, 0.0, 2.0, 1e-12, 1e-10,
      2000);
  const double exact = (1.0 - std::cos(6.0)) / 3.0;
  CHECK(std::fabs(r.value - exact) <= std::max(r.error, 1e-13));
}

TEST_CASE("hermite rule structure") {
  const HermiteRule& rule = hermite_rule(64);
  CHECK(rule.nodes.size() == 64);
  CHECK(rule.pairs.size() == 32);
  CHECK(rule.center_weight == 0.0);
  double mass = 0.0;
  for (double w : rule.weights)
    mass += w;
  CHECK(mass == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  const HermiteRule& odd = hermite_rule(33);
  CHECK(odd.center_weight > 0.0);
  CHECK(odd.pairs.size() == 16);
}
