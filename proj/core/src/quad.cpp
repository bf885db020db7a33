#include <fracplap/quad.hpp>

#include <fracplap/errors.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace fracplap {

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw ConfigError("QuadConfig: tolerances must be positive");
  if (hermite_nodes < 8)
    throw ConfigError("QuadConfig: hermite_nodes must be >= 8");
  if (!(y_ratio > 0.0 && y_ratio < 1.0))
    throw ConfigError("QuadConfig: y_ratio must lie in (0,1)");
  if (max_subdivisions < 8)
    throw ConfigError("QuadConfig: max_subdivisions too small");
  if (!(t_split > 0.0) || !(tail_radius > 0.0) || !(y0 > 0.0) || y_count < 6)
    throw ConfigError("QuadConfig: invalid split/tail/sequence settings");
}

namespace {

// Gauss-Kronrod 7-15 nodes on [0,1] side (abscissa, K15 weight, G7 weight).
constexpr double kGK15X[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kGK15WK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kGK15WG[8] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277,
    0.0, 0.381830050505119, 0.0, 0.417959183673469};

struct Segment {
  double a, b, value, error;
};

Segment gk15(const Fn1& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(mid);
  double k15 = kGK15WK[7] * fc;
  double g7 = kGK15WG[7] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15X[i];
    const double v = f(mid + dx) + f(mid - dx);
    k15 += kGK15WK[i] * v;
    g7 += kGK15WG[i] * v;
  }
  k15 *= half;
  g7 *= half;
  const double diff = std::fabs(k15 - g7);
  const double err = std::min(diff, std::pow(200.0 * diff, 1.5));
  return {a, b, k15, err};
}

} // namespace

namespace {

// global-budget adaptivity: always refine the worst segment, stop when the
// summed error estimate meets the tolerance or refinement stalls (noise
// floor of the integrand)
QuadResult refine_segments(const Fn1& f, std::vector<Segment> segs,
                           double total_width, double abs_tol, double rel_tol,
                           int max_subdivisions) {
  double value = 0.0, error = 0.0;
  for (const Segment& s : segs) {
    value += s.value;
    error += s.error;
  }
  int stall = 0;
  for (int splits = 0; splits < max_subdivisions; ++splits) {
    if (error <= std::max(abs_tol, rel_tol * std::fabs(value)))
      break;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error)
        worst = i;
    const Segment seg = segs[worst];
    if (std::fabs(seg.b - seg.a) < 1e-14 * total_width)
      break;
    const double mid = 0.5 * (seg.a + seg.b);
    const Segment left = gk15(f, seg.a, mid);
    const Segment right = gk15(f, mid, seg.b);
    value += left.value + right.value - seg.value;
    const double gain = seg.error - (left.error + right.error);
    error -= gain;
    segs[worst] = left;
    segs.push_back(right);
    if (gain <= 0.01 * seg.error) {
      if (++stall >= 8)
        break; // error estimates no longer improve; accept the noise floor
    } else {
      stall = 0;
    }
  }
  // compensated resummation keeps the estimates honest after many updates
  double v = 0.0, e = 0.0;
  for (const Segment& s : segs) {
    v += s.value;
    e += s.error;
  }
  return {v, e};
}

} // namespace

QuadResult integrate_interval(const Fn1& f, double a, double b, double abs_tol,
                              double rel_tol, int max_subdivisions) {
  if (a == b)
    return {0.0, 0.0};
  return refine_segments(f, {gk15(f, a, b)}, std::fabs(b - a), abs_tol,
                         rel_tol, max_subdivisions);
}

QuadResult integrate_interval_pts(const Fn1& f, double a, double b,
                                  const std::vector<double>& interior,
                                  double abs_tol, double rel_tol,
                                  int max_subdivisions) {
  if (a == b)
    return {0.0, 0.0};
  std::vector<double> cuts{a};
  for (double c : interior)
    if (c > a && c < b)
      cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i])
      segs.push_back(gk15(f, cuts[i], cuts[i + 1]));
  return refine_segments(f, std::move(segs), std::fabs(b - a), abs_tol,
                         rel_tol, max_subdivisions);
}

QuadResult sweep_windows(const Fn1& F, double tau0, double lo, double hi,
                         double abs_tol, double rel_tol, int max_subdivisions,
                         const std::vector<double>* focus,
                         int max_leading_zeros) {
  const double width = 2.0;
  const int max_windows = 500;
  double value = 0.0, error = 0.0;

  for (int dir = 0; dir < 2; ++dir) {
    double prev_mag = 0.0;
    int quiet = 0, zeros = 0, growing = 0;
    bool seen = false;
    bool done = false;
    for (int k = 0; k < max_windows; ++k) {
      double a, b;
      if (dir == 0) { // rightward, windows [tau0 + k w, tau0 + (k+1) w]
        a = tau0 + k * width;
        b = std::min(a + width, hi);
        if (a >= hi) {
          done = true;
          break;
        }
      } else { // leftward
        b = tau0 - k * width;
        a = std::max(b - width, lo);
        if (b <= lo) {
          done = true;
          break;
        }
      }
      const double win_abs =
          std::max(abs_tol * 0.02, rel_tol * std::fabs(value) * 0.02);
      QuadResult win =
          focus ? integrate_interval_pts(F, a, b, *focus, win_abs, rel_tol,
                                         max_subdivisions)
                : integrate_interval(F, a, b, win_abs, rel_tol,
                                     max_subdivisions);
      value += win.value;
      error += win.error;
      const double mag = std::fabs(win.value);
      const double tol_now =
          std::max(abs_tol, rel_tol * std::fabs(value)) * 0.05;
      if (!seen) {
        if (mag <= tol_now) {
          if (++zeros > max_leading_zeros) {
            done = true;
            break;
          }
          continue;
        }
        seen = true;
      }
      if (prev_mag > 0.0 && mag > prev_mag) {
        if (++growing >= 25 && mag > 1e8 * std::max(abs_tol, 1e-300))
          throw DivergenceError("sweep_windows: window contributions grow "
                                "without bound (non-integrable singularity)");
      } else {
        growing = 0;
      }
      if (mag <= tol_now) {
        if (++quiet >= 2) {
          // geometric continuation of the observed decay as tail budget
          const double q =
              prev_mag > 0.0 ? std::min(0.9, mag / prev_mag) : 0.5;
          error += mag * q / (1.0 - q);
          done = true;
          break;
        }
      } else {
        quiet = 0;
      }
      prev_mag = mag;
      if ((b >= hi && dir == 0) || (a <= lo && dir == 1)) {
        done = true;
        break;
      }
    }
    if (!done)
      throw ConvergenceError("sweep_windows: window budget exhausted");
  }
  return {value, error};
}

QuadResult integrate_time_singular(const Fn1& f, double alpha,
                                   const QuadConfig& cfg) {
  return integrate_time_singular_from(f, alpha, 0.0, cfg);
}

QuadResult integrate_time_singular_from(const Fn1& f, double alpha,
                                        double t_lo, const QuadConfig& cfg) {
  const Fn1 F = [&f, alpha](double tau) {
    const double t = std::exp(tau);
    return f(t) * std::exp(-alpha * tau);
  };
  const double lo = t_lo > 0.0 ? std::log(t_lo) : -745.0;
  return sweep_windows(F, std::log(cfg.t_split), lo, 700.0, cfg.abs_tol,
                       cfg.rel_tol, cfg.max_subdivisions);
}

QuadResult integrate_radial_symmetrized(const Fn1& g, double sp, int /*n*/,
                                        const QuadConfig& cfg) {
  const Fn1 F = [&g, sp](double rho) {
    const double r = std::exp(rho);
    return g(r) * std::exp(-sp * rho);
  };
  const double lo = cfg.epsilon_pv > 0.0 ? std::log(cfg.epsilon_pv) : -745.0;
  return sweep_windows(F, 0.0, lo, 700.0, cfg.abs_tol, cfg.rel_tol,
                       cfg.max_subdivisions);
}

QuadResult integrate_real_line(const Fn1& f, const QuadConfig& cfg) {
  QuadResult core = integrate_interval(f, -1.0, 1.0, cfg.abs_tol, cfg.rel_tol,
                                       cfg.max_subdivisions);
  const Fn1 right = [&f](double rho) {
    const double x = std::exp(rho);
    return f(x) * x;
  };
  const Fn1 left = [&f](double rho) {
    const double x = std::exp(rho);
    return f(-x) * x;
  };
  QuadResult tr = sweep_windows(right, 0.0, 0.0, 700.0, cfg.abs_tol,
                                cfg.rel_tol, cfg.max_subdivisions, nullptr, 8);
  QuadResult tl = sweep_windows(left, 0.0, 0.0, 700.0, cfg.abs_tol,
                                cfg.rel_tol, cfg.max_subdivisions, nullptr, 8);
  return {core.value + tr.value + tl.value,
          core.error + tr.error + tl.error};
}

namespace {

// Newton iteration on the orthonormal Hermite recurrence (weight e^{-x^2}).
HermiteRule build_hermite(int n) {
  HermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  double z = 0.0, pp = 0.0;
  std::vector<double> zs(m);
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * zs[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * zs[1];
    else
      z = 2.0 * z - zs[i - 2];
    for (int it = 0; it < 100; ++it) {
      double p1 = 0.7511255444649425; // pi^{-1/4}
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
             std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= 1e-15)
        break;
    }
    zs[i] = z;
    rule.nodes[i] = -z; // fill ascending: most negative first
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  for (int i = n - 1; i >= 0; --i) {
    if (rule.nodes[i] > 1e-14)
      rule.pairs.emplace_back(rule.nodes[i], rule.weights[i]);
    else if (std::fabs(rule.nodes[i]) <= 1e-14)
      rule.center_weight = rule.weights[i];
  }
  return rule;
}

} // namespace

const HermiteRule& hermite_rule(int count) {
  static std::mutex mu;
  static std::map<int, HermiteRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(count);
  if (it == cache.end())
    it = cache.emplace(count, build_hermite(count)).first;
  return it->second;
}

double heat_apply(const std::function<double(const Vec&)>& f, const Vec& x,
                  double t, const QuadConfig& cfg) {
  const HermiteRule& rule = hermite_rule(cfg.hermite_nodes);
  const double w = 2.0 * std::sqrt(t);
  if (x.n == 1) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      Vec y = x;
      y[0] += w * rule.nodes[i];
      acc += rule.weights[i] * f(y);
    }
    return acc / std::sqrt(M_PI);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      Vec y = x;
      y[0] += w * rule.nodes[i];
      y[1] += w * rule.nodes[j];
      row += rule.weights[j] * f(y);
    }
    acc += rule.weights[i] * row;
  }
  return acc / M_PI;
}

} // namespace fracplap
