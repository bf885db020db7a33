#pragma once

#include <vector>

namespace fracplap {

/// Gamma function, valid away from the poles at 0, -1, -2, ...
/// Lanczos approximation with reflection for negative arguments.
double gamma_fn(double x);

/// log |Gamma(x)|, same domain as gamma_fn.
double log_abs_gamma(double x);

/// Sign of Gamma(x): +1 or -1.
int gamma_sign(double x);

/// Lower incomplete gamma gamma(a, x) = int_0^x t^{a-1} e^{-t} dt, a > 0.
double gamma_lower(double a, double x);

/// Exponentially scaled modified Bessel function e^{-z} I_m(z), z >= 0.
double bessel_i_scaled(int m, double z);

/// All scaled orders 0..mmax at once (shared backward recurrence).
std::vector<double> bessel_i_scaled_row(int mmax, double z);

/// Unscaled I_m(z). Throws on overflow of e^z.
double bessel_i(int m, double z);

} // namespace fracplap
