#include <fracplap/funcs.hpp>

#include <fracplap/errors.hpp>

#include <cmath>

namespace fracplap {

namespace {

TestFunction make_gaussian(int n, const Vec& x0) {
  TestFunction f;
  f.n = n;
  f.value = [x0](const Vec& x) { return std::exp(-(x - x0).norm2()); };
  f.gradient = [x0](const Vec& x) {
    const Vec z = x - x0;
    return z * (-2.0 * std::exp(-z.norm2()));
  };
  f.hessian = [x0](const Vec& x) {
    const Vec z = x - x0;
    const double e = std::exp(-z.norm2());
    Mat h;
    h.n = x.n;
    for (int i = 0; i < x.n; ++i)
      for (int j = 0; j < x.n; ++j)
        h(i, j) = (4.0 * z[i] * z[j] - (i == j ? 2.0 : 0.0)) * e;
    return h;
  };
  f.sup_norm = 1.0;
  f.grad_sup_norm = std::sqrt(2.0) * std::exp(-0.5);
  f.hess_sup_norm = 2.0;
  f.heat_closed_form = [x0](const Vec& x, double t) {
    const double a = 1.0 + 4.0 * t;
    return std::pow(a, -0.5 * x.n) * std::exp(-(x - x0).norm2() / a);
  };
  f.tail_radius = 40.0;
  f.center = x0;
  f.support_radius = 9.0; // exp(-81) is below every tolerance in use
  return f;
}

} // namespace

TestFunction catalog(const std::string& name, int n) {
  if (n < 1 || n > 2)
    throw ConfigError("catalog: only n in {1,2} is supported");
  if (name == "gaussian") {
    TestFunction f = make_gaussian(n, Vec::zero(n));
    f.name = name;
    return f;
  }
  if (name == "shifted_gaussian") {
    Vec x0 = Vec::zero(n);
    for (int i = 0; i < n; ++i)
      x0[i] = 0.5;
    TestFunction f = shifted_gaussian(x0);
    return f;
  }
  if (name == "cosine") {
    TestFunction f;
    f.name = name;
    f.n = n;
    f.value = [](const Vec& x) { return std::cos(x[0]); };
    f.gradient = [](const Vec& x) {
      Vec g = Vec::zero(x.n);
      g[0] = -std::sin(x[0]);
      return g;
    };
    f.hessian = [](const Vec& x) {
      Mat h;
      h.n = x.n;
      h(0, 0) = -std::cos(x[0]);
      return h;
    };
    f.sup_norm = 1.0;
    f.grad_sup_norm = 1.0;
    f.hess_sup_norm = 1.0;
    f.heat_closed_form = [](const Vec& x, double t) {
      return std::exp(-t) * std::cos(x[0]);
    };
    f.tail_radius = 40.0;
    f.period = 2.0 * M_PI;
    return f;
  }
  if (name == "rational_bump") {
    TestFunction f;
    f.name = name;
    f.n = n;
    f.value = [](const Vec& x) { return 1.0 / (1.0 + x.norm2()); };
    f.gradient = [](const Vec& x) {
      const double d = 1.0 + x.norm2();
      return x * (-2.0 / (d * d));
    };
    f.hessian = [](const Vec& x) {
      const double d = 1.0 + x.norm2();
      Mat h;
      h.n = x.n;
      for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
          h(i, j) = 8.0 * x[i] * x[j] / (d * d * d) -
                    (i == j ? 2.0 / (d * d) : 0.0);
      return h;
    };
    f.sup_norm = 1.0;
    f.grad_sup_norm = 3.0 * std::sqrt(3.0) / 8.0; // max of 2r/(1+r^2)^2
    f.hess_sup_norm = 2.0;
    f.tail_radius = 1e4; // polynomial tail; truncation needs a long range
    return f;
  }
  if (name == "bump")
    return bump_function(0.0, 1.0);
  throw ConfigError("catalog: unknown function '" + name + "'");
}

TestFunction shifted_gaussian(const Vec& x0) {
  TestFunction f = make_gaussian(x0.n, x0);
  f.name = "shifted_gaussian";
  return f;
}

TestFunction bump_function(double center, double radius) {
  TestFunction f;
  f.name = "bump";
  f.n = 1;
  const double c = center, R = radius;
  f.value = [c, R](const Vec& x) {
    const double w = (x[0] - c) / R;
    const double m = 1.0 - w * w;
    return m > 0.0 ? m * m * m : 0.0;
  };
  f.gradient = [c, R](const Vec& x) {
    Vec g = Vec::zero(x.n);
    const double z = x[0] - c;
    const double m = 1.0 - (z / R) * (z / R);
    if (m > 0.0)
      g[0] = -6.0 * z / (R * R) * m * m;
    return g;
  };
  f.hessian = [c, R](const Vec& x) {
    Mat h;
    h.n = x.n;
    const double z = x[0] - c;
    const double m = 1.0 - (z / R) * (z / R);
    if (m > 0.0)
      h(0, 0) = m * (-6.0 / (R * R) * m + 24.0 * z * z / (R * R * R * R));
    return h;
  };
  f.sup_norm = 1.0;
  f.grad_sup_norm = 6.0 * 0.16 * std::sqrt(5.0) / radius; // 6 zeta (1-zeta^2)^2 at zeta=1/sqrt5
  f.hess_sup_norm = 6.0 / (radius * radius);
  f.tail_radius = std::fabs(center) + radius;
  f.center = Vec::d1(center);
  f.support_radius = radius;
  return f;
}

TestFunction scaled(const TestFunction& u, double h) {
  TestFunction f = u;
  f.name = u.name + "_scaled";
  auto val = u.value;
  auto grad = u.gradient;
  auto hess = u.hessian;
  f.value = [val, h](const Vec& x) { return h * val(x); };
  f.gradient = [grad, h](const Vec& x) { return grad(x) * h; };
  f.hessian = [hess, h](const Vec& x) {
    Mat m = hess(x);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j)
        m(i, j) *= h;
    return m;
  };
  const double ah = std::fabs(h);
  f.sup_norm = ah * u.sup_norm;
  f.grad_sup_norm = ah * u.grad_sup_norm;
  f.hess_sup_norm = ah * u.hess_sup_norm;
  if (u.heat_closed_form) {
    auto heat = u.heat_closed_form;
    f.heat_closed_form = [heat, h](const Vec& x, double t) {
      return h * heat(x, t);
    };
  }
  return f;
}

TestFunction dilated(const TestFunction& u, double h) {
  TestFunction f = u;
  f.name = u.name + "_dilated";
  auto val = u.value;
  auto grad = u.gradient;
  auto hess = u.hessian;
  f.value = [val, h](const Vec& x) { return val(x * h); };
  f.gradient = [grad, h](const Vec& x) { return grad(x * h) * h; };
  f.hessian = [hess, h](const Vec& x) {
    Mat m = hess(x * h);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j)
        m(i, j) *= h * h;
    return m;
  };
  f.grad_sup_norm = std::fabs(h) * u.grad_sup_norm;
  f.hess_sup_norm = h * h * u.hess_sup_norm;
  f.heat_closed_form = nullptr; // image would need rescaled time; not used
  f.tail_radius = u.tail_radius / std::fabs(h);
  f.period = u.period / std::fabs(h);
  f.center = u.center * (1.0 / h);
  if (u.support_radius < 1e290)
    f.support_radius = u.support_radius / std::fabs(h);
  return f;
}

TestFunction translated(const TestFunction& u, const Vec& a) {
  TestFunction f = u;
  f.name = u.name + "_translated";
  auto val = u.value;
  auto grad = u.gradient;
  auto hess = u.hessian;
  f.value = [val, a](const Vec& x) { return val(x - a); };
  f.gradient = [grad, a](const Vec& x) { return grad(x - a); };
  f.hessian = [hess, a](const Vec& x) { return hess(x - a); };
  if (u.heat_closed_form) {
    auto heat = u.heat_closed_form;
    f.heat_closed_form = [heat, a](const Vec& x, double t) {
      return heat(x - a, t);
    };
  }
  f.tail_radius = u.tail_radius + a.norm();
  f.center = u.center + a;
  return f;
}

double heat_apply_closed_form(const TestFunction& u, const Vec& x, double t) {
  if (!u.heat_closed_form)
    throw ConfigError("heat_apply_closed_form: '" + u.name +
                      "' has no closed-form heat image");
  return u.heat_closed_form(x, t);
}

double p_laplacian_1d(const TestFunction& u, double x, double p) {
  if (u.n != 1)
    throw ConfigError("p_laplacian_1d: requires n = 1");
  const Vec xv = Vec::d1(x);
  const double du = u.gradient(xv)[0];
  const double d2u = u.hessian(xv)(0, 0);
  if (p == 2.0)
    return d2u;
  if (du == 0.0) {
    if (p < 2.0)
      throw HypothesisError("p_laplacian_1d: degenerate point (p < 2, u' = 0)");
    return 0.0; // |u'|^{p-2} vanishes faster than u'' matters
  }
  return (p - 1.0) * std::pow(std::fabs(du), p - 2.0) * d2u;
}

} // namespace fracplap
