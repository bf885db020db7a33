#include <fracplap/errors.hpp>
#include <fracplap/funcs.hpp>

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace fracplap;

namespace {

const std::vector<std::string> kNames{"gaussian", "cosine", "rational_bump",
                                      "shifted_gaussian"};

std::vector<Vec> sample_points(int n) {
  std::vector<Vec> pts;
  if (n == 1)
    for (double x : {-2.0, -0.7, 0.0, 0.3, 1.1, 2.5})
      pts.push_back(Vec::d1(x));
  else
    for (double x : {-1.5, -0.4, 0.2, 1.0})
      for (double y : {-1.0, 0.0, 0.8})
        pts.push_back(Vec::d2(x, y));
  return pts;
}

} // namespace

TEST_CASE("catalog values at the origin") {
  CHECK(catalog("gaussian", 1).value(Vec::d1(0.0)) == 1.0);
  CHECK(catalog("cosine", 1).hessian(Vec::d1(0.0))(0, 0) == -1.0);
  CHECK(catalog("gaussian", 2).gradient(Vec::d2(0.0, 0.0)).norm() == 0.0);
  CHECK(catalog("rational_bump", 1).value(Vec::d1(1.0)) == 0.5);
  CHECK_THROWS_AS(catalog("nope", 1), ConfigError);
}

TEST_CASE("gradient and hessian agree with central differences") {
  const double step = 1e-4;
  for (const auto& name : kNames)
    for (int n : {1, 2}) {
      const TestFunction u = catalog(name, n);
      for (const Vec& x : sample_points(n)) {
        const Vec g = u.gradient(x);
        const Mat h = u.hessian(x);
        for (int i = 0; i < n; ++i) {
          Vec xp = x, xm = x;
          xp[i] += step;
          xm[i] -= step;
          const double fd_g =
              (u.value(xp) - u.value(xm)) / (2.0 * step);
          CHECK(std::fabs(fd_g - g[i]) <= 1e-6);
          for (int j = 0; j < n; ++j) {
            Vec xpp = x, xpm = x, xmp = x, xmm = x;
            xpp[i] += step;
            xpp[j] += step;
            xpm[i] += step;
            xpm[j] -= step;
            xmp[i] -= step;
            xmp[j] += step;
            xmm[i] -= step;
            xmm[j] -= step;
            const double fd_h = (u.value(xpp) - u.value(xpm) - u.value(xmp) +
                                 u.value(xmm)) /
                                (4.0 * step * step);
            CHECK(std::fabs(fd_h - h(i, j)) <= 1e-6);
          }
        }
      }
    }
}

TEST_CASE("sup-norm fields bound dense samples") {
  for (const auto& name : kNames) {
    const TestFunction u = catalog(name, 1);
    for (double x = -8.0; x <= 8.0; x += 0.01) {
      const Vec xv = Vec::d1(x);
      CHECK(std::fabs(u.value(xv)) <= u.sup_norm * (1.0 + 1e-12));
      CHECK(u.gradient(xv).norm() <= u.grad_sup_norm * (1.0 + 1e-12));
      CHECK(std::fabs(u.hessian(xv)(0, 0)) <= u.hess_sup_norm * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("closed-form heat images") {
  const TestFunction g1 = catalog("gaussian", 1);
  CHECK(heat_apply_closed_form(g1, Vec::d1(0.0), 0.0) == 1.0);
  CHECK(heat_apply_closed_form(g1, Vec::d1(0.0), 0.25) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  const TestFunction c1f = catalog("cosine", 1);
  CHECK(heat_apply_closed_form(c1f, Vec::d1(0.0), 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  const TestFunction g2 = catalog("gaussian", 2);
  CHECK(heat_apply_closed_form(g2, Vec::d2(0.0, 0.0), 0.5) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(
      heat_apply_closed_form(catalog("rational_bump", 1), Vec::d1(0.0), 1.0),
      ConfigError);
}

TEST_CASE("1-D p-Laplacian") {
  const TestFunction cosine = catalog("cosine", 1);
  CHECK(p_laplacian_1d(cosine, 0.0, 2.0) == doctest::Approx(-1.0));
  const TestFunction gauss = catalog("gaussian", 1);
  // gradient vanishes at 0: zero for p > 2, degenerate for p < 2
  CHECK(p_laplacian_1d(gauss, 0.0, 3.0) == 0.0);
  CHECK_THROWS_AS(p_laplacian_1d(gauss, 0.0, 1.5), HypothesisError);
}

TEST_CASE("p-Laplacian agrees with the flux finite difference") {
  // Delta_p u = d/dx (|u'|^{p-2} u')
  const TestFunction gauss = catalog("gaussian", 1);
  const double p = 3.0, x = 0.5, h = 1e-5;
  auto flux = [&](double y) {
    const double du = gauss.gradient(Vec::d1(y))[0];
    return std::pow(std::fabs(du), p - 2.0) * du;
  };
  const double fd = (flux(x + h) - flux(x - h)) / (2.0 * h);
  CHECK(p_laplacian_1d(gauss, x, p) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("bump function is C^2 with compact support") {
  const TestFunction b = bump_function(2.0, 1.5);
  CHECK(b.value(Vec::d1(2.0)) == 1.0);
  CHECK(b.value(Vec::d1(3.6)) == 0.0);
  CHECK(b.value(Vec::d1(0.3)) == 0.0);
  // C^2 matching at the support edge
  const double e = 1e-7;
  CHECK(std::fabs(b.value(Vec::d1(3.5 - e))) < 1e-13);
  CHECK(std::fabs(b.gradient(Vec::d1(3.5 - e))[0]) < 1e-6);
  CHECK(std::fabs(b.hessian(Vec::d1(3.5 - e))(0, 0)) < 1e-4);
  // strictly decreasing along the radius
  double prev = b.value(Vec::d1(2.0));
  for (double x = 2.1; x < 3.5; x += 0.1) {
    const double v = b.value(Vec::d1(x));
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("scaled / dilated / translated wrappers") {
  const TestFunction g = catalog("gaussian", 1);
  const TestFunction sg = scaled(g, 2.0);
  CHECK(sg.value(Vec::d1(0.3)) ==
        doctest::Approx(2.0 * g.value(Vec::d1(0.3))));
  CHECK(sg.hessian(Vec::d1(0.3))(0, 0) ==
        doctest::Approx(2.0 * g.hessian(Vec::d1(0.3))(0, 0)));
  const TestFunction dg = dilated(g, 0.5);
  CHECK(dg.value(Vec::d1(2.0)) == doctest::Approx(g.value(Vec::d1(1.0))));
  CHECK(dg.gradient(Vec::d1(2.0))[0] ==
        doctest::Approx(0.5 * g.gradient(Vec::d1(1.0))[0]));
  const TestFunction tg = translated(g, Vec::d1(1.0));
  CHECK(tg.value(Vec::d1(1.0)) == 1.0);
}

TEST_CASE("phi_p basics") {
  CHECK(phi_p(0.0, 1.5) == 0.0);
  CHECK(phi_p(2.0, 3.0) == doctest::Approx(4.0));
  CHECK(phi_p(-2.0, 3.0) == doctest::Approx(-4.0));
  CHECK(phi_p(0.25, 2.0) == doctest::Approx(0.25));
}
