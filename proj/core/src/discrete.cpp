#include <fracplap/discrete.hpp>

#include <fracplap/constants.hpp>
#include <fracplap/errors.hpp>
#include <fracplap/special.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

namespace fracplap {

GridFunction::GridFunction(const TestFunction& u, const Vec& origin, double h,
                           int radius)
    : n_(u.n), origin_(origin), h_(h), radius_(radius), u_(&u) {
  if (!(h > 0.0))
    throw ConfigError("GridFunction: spacing must be positive");
  const int side = 2 * radius + 1;
  values_.resize(n_ == 1 ? side : side * side);
  if (n_ == 1) {
    for (int i = -radius; i <= radius; ++i)
      values_[i + radius] = u.value(Vec::d1(origin[0] + h * i));
  } else {
    for (int i = -radius; i <= radius; ++i)
      for (int j = -radius; j <= radius; ++j)
        values_[(i + radius) * side + (j + radius)] =
            u.value(Vec::d2(origin[0] + h * i, origin[1] + h * j));
  }
}

int GridFunction::index(const std::array<int, 2>& beta) const {
  const int side = 2 * radius_ + 1;
  if (n_ == 1)
    return beta[0] + radius_;
  return (beta[0] + radius_) * side + (beta[1] + radius_);
}

double GridFunction::sup() const {
  double m = 0.0;
  for (double v : values_)
    m = std::max(m, std::fabs(v));
  return m;
}

double GridFunction::at_offset(const std::array<int, 2>& beta) const {
  bool inside = std::abs(beta[0]) <= radius_ &&
                (n_ == 1 || std::abs(beta[1]) <= radius_);
  if (inside)
    return values_[index(beta)];
  if (zero_extension_)
    return 0.0;
  Vec y = origin_;
  y[0] += h_ * beta[0];
  if (n_ == 2)
    y[1] += h_ * beta[1];
  return u_->value(y);
}

double discrete_laplacian(const GridFunction& g,
                          const std::array<int, 2>& beta) {
  const double h2 = g.spacing() * g.spacing();
  const double center = g.at_offset(beta);
  double acc = 0.0;
  for (int i = 0; i < g.dim(); ++i) {
    std::array<int, 2> up = beta, dn = beta;
    up[i] += 1;
    dn[i] -= 1;
    acc += g.at_offset(up) + g.at_offset(dn) - 2.0 * center;
  }
  return acc / h2;
}

double semigroup_weight(const std::array<int, 2>& beta, double t, int n) {
  if (!(t > 0.0))
    throw ConfigError("semigroup_weight: requires t > 0");
  double acc = 1.0;
  for (int i = 0; i < n; ++i)
    acc *= bessel_i_scaled(std::abs(beta[i]), 2.0 * t);
  return acc; // e^{-2nt} prod I_{|beta_i|}(2t) via the scaled evaluations
}

namespace {

// int_delta^inf e^{-2t} I_m(2t) ... as a product over dims, per offset.
double weight_integral(const std::array<int, 2>& beta, int n, double sp,
                       double delta, const QuadConfig& cfg) {
  const Fn1 f = [beta, n](double t) {
    return semigroup_weight(beta, t, n);
  };
  const int mmax = std::max(std::abs(beta[0]), n == 2 ? std::abs(beta[1]) : 0);
  // start the sweep near the mass of the integrand (t ~ m^2/4 for large m)
  QuadConfig wcfg = cfg;
  wcfg.t_split = std::max({delta * 2.0, 1.0, mmax * mmax / 6.0});
  return integrate_time_singular_from(f, 0.5 * sp, delta, wcfg).value;
}

} // namespace

double DiscreteWeights::weight(const std::array<int, 2>& beta) const {
  if (params.n == 1) {
    const int m = std::abs(beta[0]);
    if (m == 0 || m > stencil)
      return 0.0;
    return w1d[m - 1];
  }
  int m1 = std::abs(beta[0]), m2 = std::abs(beta[1]);
  if (m1 < m2)
    std::swap(m1, m2);
  if (m1 == 0 || m1 > stencil)
    return 0.0;
  return w2d[m1][m2];
}

std::string DiscreteWeights::to_csv() const {
  std::string out;
  auto put = [&out](double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
  };
  if (params.n == 1) {
    out += "beta,weight\n";
    for (int m = 1; m <= stencil; ++m) {
      put(m);
      out += ',';
      put(w1d[m - 1]);
      out += '\n';
    }
  } else {
    out += "beta1,beta2,weight\n";
    for (int m1 = 1; m1 <= stencil; ++m1)
      for (int m2 = 0; m2 <= m1; ++m2) {
        put(m1);
        out += ',';
        put(m2);
        out += ',';
        put(w2d[m1][m2]);
        out += '\n';
      }
  }
  return out;
}

DiscreteWeights build_weights(const FracParams& params, double h, double delta,
                              int stencil, const QuadConfig& cfg) {
  if (!(h > 0.0) || delta < 0.0 || stencil < 1)
    throw ConfigError("build_weights: invalid h, delta, or stencil");
  if (delta == 0.0 && params.sp_ge_2)
    throw DivergenceError(
        "weights_diverge: K_{beta,h} is not defined for sp >= 2 without the "
        "delta regularization");
  DiscreteWeights out{params, h, delta, stencil, {}, {}, 0.0, 0.0};
  const double c2 = constant_set(params).c2;
  const double scale = c2 * std::pow(h, -params.sp);
  if (params.n == 1) {
    out.w1d.resize(stencil);
    for (int m = 1; m <= stencil; ++m)
      out.w1d[m - 1] =
          scale * weight_integral({m, 0}, 1, params.sp, delta, cfg);
    // sum over all m >= 1 from the semigroup mass identity sum_beta G = 1
    QuadConfig wcfg = cfg;
    wcfg.t_split = std::max(1.0, 2.0 * delta);
    const Fn1 rest = [](double t) {
      return 1.0 - bessel_i_scaled(0, 2.0 * t);
    };
    const double all =
        0.5 * scale *
        integrate_time_singular_from(rest, 0.5 * params.sp, delta, wcfg).value;
    out.tail_ksum = all;
    for (double k : out.w1d)
      out.tail_ksum -= k;
    out.tail_ksum = std::max(out.tail_ksum, 0.0);
  } else {
    out.w2d.assign(stencil + 1, {});
    for (int m1 = 1; m1 <= stencil; ++m1) {
      out.w2d[m1].resize(m1 + 1);
      for (int m2 = 0; m2 <= m1; ++m2)
        out.w2d[m1][m2] =
            scale * weight_integral({m1, m2}, 2, params.sp, delta, cfg);
    }
  }
  // continuum-kernel tail: K_beta ~ C1 h^{-sp} |beta|^{-n-sp} for |beta| large
  const double c1v = c1(params);
  const double ang = params.n == 1 ? 2.0 : 2.0 * M_PI;
  out.tail_bound = 2.0 * c1v * std::pow(h, -params.sp) * ang *
                   std::pow(static_cast<double>(stencil), -params.sp) /
                   params.sp;
  return out;
}

DiscreteValue apply_discrete(const GridFunction& g,
                             const std::array<int, 2>& beta,
                             const DiscreteWeights& w) {
  if (g.dim() != w.params.n)
    throw ConfigError("apply_discrete: dimension mismatch");
  const double p = w.params.p;
  const double center = g.at_offset(beta);
  double acc = 0.0;
  double tail = w.tail_bound * std::pow(2.0 * g.sup(), p - 1.0);
  const int B = w.stencil;
  if (w.params.n == 1) {
    for (int m = 1; m <= B; ++m) {
      const double k = w.w1d[m - 1];
      std::array<int, 2> up = beta, dn = beta;
      up[0] += m;
      dn[0] -= m;
      acc += k * (phi_p(center - g.at_offset(up), p) +
                  phi_p(center - g.at_offset(dn), p));
    }
  } else {
    for (int i = -B; i <= B; ++i)
      for (int j = -B; j <= B; ++j) {
        if (i == 0 && j == 0)
          continue;
        std::array<int, 2> off = {beta[0] + i, beta[1] + j};
        acc += w.weight({i, j}) * phi_p(center - g.at_offset(off), p);
      }
  }
  // periodic samples never decay: the truncated sum is missing the mean of
  // the pair numerator times the exact tail weight mass, which would bias
  // the h-refinement; restore it and keep the oscillatory rest in the bound
  const double T = g.source().period;
  if (w.params.n == 1 && T > 0.0 && !g.zero_extended() &&
      w.tail_ksum > 0.0) {
    const auto& u = g.source();
    const double x0 = g.origin()[0] + g.spacing() * beta[0];
    const int K = 1024;
    const double R = g.spacing() * (B + 1);
    double mean = 0.0, amp_max = 0.0;
    std::vector<double> ring(K);
    for (int j = 0; j < K; ++j) {
      const double r = R + j * T / K;
      ring[j] = phi_p(center - u.value(Vec::d1(x0 + r)), p) +
                phi_p(center - u.value(Vec::d1(x0 - r)), p);
      mean += ring[j];
    }
    mean /= K;
    for (int j = 0; j < K; ++j)
      amp_max = std::max(amp_max, std::fabs(ring[j] - mean));
    acc += mean * w.tail_ksum;
    tail = amp_max * w.tail_ksum;
  }
  return {acc, tail};
}

} // namespace fracplap
