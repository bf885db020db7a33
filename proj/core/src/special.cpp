#include <fracplap/special.hpp>

#include <fracplap/errors.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

namespace fracplap {

namespace {

// Lanczos coefficients, g = 607/128 (Godfrey's 15-term set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// log Gamma(x) for x > 0.
double log_gamma_positive(double x) {
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int k = 1; k < 15; ++k)
    acc += kLanczos[k] / (z + k);
  const double t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

// sin(pi*x) with argument reduction, accurate near integers.
double sin_pi(double x) {
  const double m = std::floor(x);
  const double r = x - m;
  double s = std::sin(M_PI * r);
  if (static_cast<std::int64_t>(m) % 2 != 0)
    s = -s;
  return s;
}

// Upper incomplete gamma Gamma(a,x)/ (x^a e^-x) by Lentz continued fraction.
double upper_gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16)
      return h;
  }
  throw ConvergenceError("gamma_lower: continued fraction did not converge");
}

// Scaled Bessel by the ascending series, for small z.
double bessel_series_scaled(int m, double z) {
  // e^{-z} (z/2)^m / m! * sum_k (z^2/4)^k / (k! (m+1)...(m+k))
  const double lpre = m * std::log(z / 2.0) - log_gamma_positive(m + 1.0) - z;
  if (lpre < -745.0)
    return 0.0;
  const double q = z * z / 4.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= q / (static_cast<double>(k) * (m + k));
    sum += term;
    if (term < sum * 1e-17)
      break;
  }
  return std::exp(lpre) * sum;
}

// Scaled Bessel by the large-z asymptotic expansion; needs z >> m^2.
double bessel_asymptotic_scaled(int m, double z) {
  const double mu = 4.0 * static_cast<double>(m) * m;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= -num / (8.0 * z * k);
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum))
      break;
  }
  return sum / std::sqrt(2.0 * M_PI * z);
}

bool use_asymptotic(int m, double z) {
  return z >= 50.0 && z >= 4.0 * static_cast<double>(m) * m;
}

// Miller backward recurrence, normalized by sum_m I_m(z) = e^z.
// Fills row[0..mmax] with e^{-z} I_m(z).
void bessel_miller_row(int mmax, double z, double* row) {
  const double zi = 2.0 / z;
  const int big = std::max(mmax, static_cast<int>(z));
  const int m0 = big + 40 + static_cast<int>(10.0 * std::sqrt(static_cast<double>(big) + 1.0));
  double ip = 0.0;   // I_{k+1}
  double ic = 1e-30; // I_k
  double sum = 0.0;  // I_0 + 2 sum_{k>=1} I_k, accumulated on the way down
  for (int k = m0; k >= 1; --k) {
    const double im = ip + zi * k * ic; // I_{k-1}
    sum += 2.0 * ic;
    if (k - 1 <= mmax)
      row[k - 1] = im; // provisional, rescaled below
    ip = ic;
    ic = im;
    if (std::fabs(ic) > 1e280) {
      const double f = 1e-280;
      ip *= f;
      ic *= f;
      sum *= f;
      for (int j = std::max(0, k - 1); j <= mmax; ++j)
        row[j] *= f;
    }
  }
  sum += ic; // the I_0 term
  for (int j = 0; j <= mmax; ++j)
    row[j] /= sum;
}

} // namespace

double log_abs_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw Error("gamma: pole at nonpositive integer");
  if (x >= 0.5)
    return log_gamma_positive(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return std::log(M_PI) - std::log(std::fabs(sin_pi(x))) - log_gamma_positive(1.0 - x);
}

int gamma_sign(double x) {
  if (is_nonpositive_integer(x))
    throw Error("gamma: pole at nonpositive integer");
  if (x >= 0.5)
    return 1;
  return sin_pi(x) > 0.0 ? 1 : -1;
}

double gamma_fn(double x) {
  return gamma_sign(x) * std::exp(log_abs_gamma(x));
}

double gamma_lower(double a, double x) {
  if (!(a > 0.0))
    throw ConfigError("gamma_lower: requires a > 0");
  if (x < 0.0)
    throw ConfigError("gamma_lower: requires x >= 0");
  if (x == 0.0)
    return 0.0;
  if (x > 700.0 && x > 10.0 * a)
    return gamma_fn(a); // machine-complete
  const double lpre = a * std::log(x) - x;
  if (x < a + 1.0) {
    // series gamma(a,x) = x^a e^{-x} sum_k x^k / (a (a+1) ... (a+k))
    double term = 1.0 / a, sum = term;
    for (int k = 1; k <= 500; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term < sum * 1e-17)
        return sum * std::exp(lpre);
    }
    throw ConvergenceError("gamma_lower: series did not converge");
  }
  const double upper = upper_gamma_cf(a, x) * std::exp(lpre);
  return gamma_fn(a) - upper;
}

double bessel_i_scaled(int m, double z) {
  if (m < 0)
    m = -m; // I_{-m} = I_m for integer order
  if (z < 0.0)
    throw ConfigError("bessel_i_scaled: requires z >= 0");
  if (z == 0.0)
    return m == 0 ? 1.0 : 0.0;
  if (z < 0.5)
    return bessel_series_scaled(m, z);
  if (use_asymptotic(m, z))
    return bessel_asymptotic_scaled(m, z);
  std::vector<double> row(m + 1);
  bessel_miller_row(m, z, row.data());
  return row[m];
}

std::vector<double> bessel_i_scaled_row(int mmax, double z) {
  if (mmax < 0)
    throw ConfigError("bessel_i_scaled_row: requires mmax >= 0");
  if (z < 0.0)
    throw ConfigError("bessel_i_scaled_row: requires z >= 0");
  std::vector<double> row(mmax + 1, 0.0);
  if (z == 0.0) {
    row[0] = 1.0;
    return row;
  }
  if (z < 0.5) {
    for (int m = 0; m <= mmax; ++m)
      row[m] = bessel_series_scaled(m, z);
    return row;
  }
  if (use_asymptotic(mmax, z)) {
    for (int m = 0; m <= mmax; ++m)
      row[m] = bessel_asymptotic_scaled(m, z);
    return row;
  }
  bessel_miller_row(mmax, z, row.data());
  return row;
}

double bessel_i(int m, double z) {
  if (z > 700.0)
    throw Error("bessel_i: overflow; use bessel_i_scaled");
  return bessel_i_scaled(m, z) * std::exp(z);
}

} // namespace fracplap
