#pragma once

#include <fracplap/params.hpp>

namespace fracplap {

/// The four normalization constants for a given (n, s, p), all positive.
/// With c1 chosen as in the continuity lemma, c2, c3, c4 do not depend on n.
struct ConstantSet {
  double c1;
  double c2;
  double c3;
  double c4;
};

/// C1(n,s,p) = (sp/2)(1-s) 2^{2s-1} pi^{-(n-1)/2}
///             Gamma((n+sp)/2) / (Gamma((p+1)/2) Gamma(2-s)).
/// For p = 2 this coincides with the classical multiplier constant c_{n,s}.
double c1(const FracParams& params);

/// The classical p = 2 constant c_{n,s} = s(1-s) 2^{2s} Gamma((n+2s)/2)
/// / (pi^{n/2} Gamma(2-s)), kept as an independent expression for checks.
double c_ns(int n, double s);

/// All four constants, computed as a single sum of log-Gamma terms.
ConstantSet constant_set(const FracParams& params);

} // namespace fracplap
