#include <fracplap/constants.hpp>

#include <fracplap/special.hpp>

#include <cmath>

namespace fracplap {

namespace {

const double kLogPi = std::log(M_PI);
const double kLog2 = std::log(2.0);

// log C1, assembled so that every other constant can reuse the pieces.
double log_c1(const FracParams& pr) {
  const double sp = pr.sp;
  return std::log(sp / 2.0) + std::log1p(-pr.s) + (2.0 * pr.s - 1.0) * kLog2 -
         0.5 * (pr.n - 1) * kLogPi + log_abs_gamma((pr.n + sp) / 2.0) -
         log_abs_gamma((pr.p + 1.0) / 2.0) - log_abs_gamma(2.0 - pr.s);
}

} // namespace

double c1(const FracParams& params) {
  return std::exp(log_c1(params));
}

double c_ns(int n, double s) {
  return s * (1.0 - s) *
         std::exp(2.0 * s * kLog2 + log_abs_gamma((n + 2.0 * s) / 2.0) -
                  0.5 * n * kLogPi - log_abs_gamma(2.0 - s));
}

ConstantSet constant_set(const FracParams& params) {
  const double lc1 = log_c1(params);
  const double sp = params.sp;
  const double half_n_log_pi = 0.5 * params.n * kLogPi;
  const double lg_nsp = log_abs_gamma((params.n + sp) / 2.0);

  ConstantSet out;
  out.c1 = std::exp(lc1);
  out.c2 = std::exp(lc1 + half_n_log_pi - sp * kLog2 - lg_nsp);
  out.c3 = std::exp(lc1 + half_n_log_pi + log_abs_gamma(sp / 2.0) - lg_nsp);
  out.c4 = std::exp(lc1 + half_n_log_pi - sp * kLog2 -
                    log_abs_gamma((2.0 + sp) / 2.0) - lg_nsp);
  return out;
}

} // namespace fracplap
