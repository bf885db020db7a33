#pragma once

#include <fracplap/errors.hpp>

namespace fracplap {

/// The parameter triple (n, s, p) of the fractional p-Laplace operator,
/// with the derived quantities every evaluator branches on.
struct FracParams {
  int n;
  double s;
  double p;

  double sp;           // s*p
  bool small_p_regime; // p < 2/(2-s): gradient-nonvanishing hypothesis applies
  bool sp_ge_2;        // sp >= 2: unregularized discrete weights diverge

  FracParams(int n_, double s_, double p_) : n(n_), s(s_), p(p_) {
    if (n < 1)
      throw ConfigError("FracParams: dimension n must be >= 1");
    if (!(s > 0.0 && s < 1.0))
      throw ConfigError("FracParams: s must lie in (0,1)");
    if (!(p > 1.0))
      throw ConfigError("FracParams: p must lie in (1,inf)");
    sp = s * p;
    small_p_regime = p < 2.0 / (2.0 - s);
    sp_ge_2 = sp >= 2.0;
  }
};

} // namespace fracplap
