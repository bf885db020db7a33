#include <fracplap/seminorm.hpp>

#include <fracplap/constants.hpp>
#include <fracplap/errors.hpp>

#include "detail.hpp"

#include <cmath>

namespace fracplap {

namespace {

// the inner quadrature noise must sit below the outer tolerance, or the
// outer adaptive rule chases jumps it can never resolve
QuadConfig inner_cfg(const QuadConfig& outer) {
  QuadConfig c = outer;
  c.rel_tol = std::max(outer.rel_tol * 0.05, 1e-11);
  c.abs_tol = std::max(outer.abs_tol * 0.05, 1e-13);
  return c;
}

void check_seminorm_inputs(const TestFunction& u, const FracParams& params) {
  if (params.n != 1 || u.n != 1)
    throw ConfigError("seminorm: implemented for n = 1");
  if (u.tail_radius > 1e5 && u.name.rfind("rational", 0) != 0)
    throw ConfigError("seminorm: requires a decaying test function");
  if (!u.heat_closed_form && u.name.rfind("cosine", 0) == 0)
    throw ConfigError("seminorm: cosine has no finite Gagliardo seminorm");
}

// outer integral over x of a nonnegative inner profile; tracks the largest
// relative inner error seen as part of the budget
template <typename Inner>
EvalResult outer_integral(Inner inner, double constant, double p,
                          const QuadConfig& cfg) {
  double inner_rel = 0.0;
  const Fn1 f = [&](double x) {
    const QuadResult q = inner(x);
    if (q.value != 0.0)
      inner_rel = std::max(inner_rel, q.error / std::fabs(q.value));
    return q.value;
  };
  QuadConfig ocfg = cfg;
  ocfg.abs_tol = std::max(cfg.abs_tol, 0.001 * cfg.rel_tol);
  const QuadResult outer = integrate_real_line(f, ocfg);
  const double raw = constant * outer.value;
  const double raw_err =
      constant * outer.error + inner_rel * std::fabs(raw);
  if (raw <= 0.0)
    return {0.0, std::pow(raw_err, 1.0 / p)};
  const double value = std::pow(raw, 1.0 / p);
  return {value, value / p * raw_err / raw};
}

} // namespace

EvalResult seminorm_direct(const TestFunction& u, const FracParams& params,
                           const QuadConfig& cfg) {
  cfg.validate();
  check_seminorm_inputs(u, params);
  const QuadConfig icfg = inner_cfg(cfg);
  auto inner = [&](double x) {
    DifferencePairs v(u, Vec::d1(x), params.p, PairKind::abs_power);
    return detail::radial_power_integral(v, params.sp, icfg);
  };
  return outer_integral(inner, c1(params), params.p, cfg);
}

EvalResult seminorm_semigroup(const TestFunction& u, const FracParams& params,
                              const QuadConfig& cfg) {
  cfg.validate();
  check_seminorm_inputs(u, params);
  const QuadConfig icfg = inner_cfg(cfg);
  auto inner = [&](double x) {
    DifferencePairs v(u, Vec::d1(x), params.p, PairKind::abs_power);
    return detail::subordination_integral(v, params, icfg);
  };
  return outer_integral(inner, constant_set(params).c2, params.p, cfg);
}

EvalResult seminorm_balakrishnan(const TestFunction& u,
                                 const FracParams& params,
                                 const QuadConfig& cfg) {
  cfg.validate();
  check_seminorm_inputs(u, params);
  const QuadConfig icfg = inner_cfg(cfg);
  auto inner = [&](double x) {
    DifferencePairs v(u, Vec::d1(x), params.p, PairKind::abs_power);
    return detail::balakrishnan_integral(v, params, icfg);
  };
  return outer_integral(inner, constant_set(params).c4, params.p, cfg);
}

SeminormReport seminorm_all(const TestFunction& u, const FracParams& params,
                            const QuadConfig& cfg) {
  return {seminorm_direct(u, params, cfg), seminorm_semigroup(u, params, cfg),
          seminorm_balakrishnan(u, params, cfg)};
}

} // namespace fracplap
