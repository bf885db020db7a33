#pragma once

#include <array>
#include <cmath>

namespace fracplap {

/// Point / vector in R^n for n in {1, 2}.
struct Vec {
  int n = 1;
  std::array<double, 2> c{0.0, 0.0};

  static Vec d1(double x) { return Vec{1, {x, 0.0}}; }
  static Vec d2(double x, double y) { return Vec{2, {x, y}}; }
  static Vec zero(int n) { return Vec{n, {0.0, 0.0}}; }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  double norm2() const {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      s += c[i] * c[i];
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i)
      r.c[i] += o.c[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i)
      r.c[i] -= o.c[i];
    return r;
  }
  Vec operator*(double h) const {
    Vec r = *this;
    for (int i = 0; i < n; ++i)
      r.c[i] *= h;
    return r;
  }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.n; ++i)
    s += a.c[i] * b.c[i];
  return s;
}

/// Symmetric n x n matrix (Hessians), n <= 2.
struct Mat {
  int n = 1;
  std::array<std::array<double, 2>, 2> a{{{0.0, 0.0}, {0.0, 0.0}}};

  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }
};

/// omega^T M omega
inline double quadratic_form(const Mat& m, const Vec& omega) {
  double s = 0.0;
  for (int i = 0; i < omega.n; ++i)
    for (int j = 0; j < omega.n; ++j)
      s += omega[i] * m(i, j) * omega[j];
  return s;
}

} // namespace fracplap
