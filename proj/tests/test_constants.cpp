#include <fracplap/constants.hpp>
#include <fracplap/errors.hpp>
#include <fracplap/special.hpp>

#include <doctest.h>

#include <cmath>

using namespace fracplap;

TEST_CASE("FracParams validation and derived flags") {
  CHECK_THROWS_AS(FracParams(0, 0.5, 2.0), ConfigError);
  CHECK_THROWS_AS(FracParams(1, 1.0, 2.0), ConfigError);
  CHECK_THROWS_AS(FracParams(1, 0.5, 1.0), ConfigError);

  const FracParams a(1, 0.5, 2.0);
  CHECK(a.sp == 1.0);
  CHECK_FALSE(a.small_p_regime);
  CHECK_FALSE(a.sp_ge_2);

  // p < 2/(2-s): s = 0.75 gives the threshold 1.6
  CHECK(FracParams(1, 0.75, 1.5).small_p_regime);
  CHECK_FALSE(FracParams(1, 0.75, 1.7).small_p_regime);
  CHECK(FracParams(1, 0.75, 3.0).sp_ge_2);
}

TEST_CASE("c1 at the known values") {
  CHECK(c1(FracParams(1, 0.5, 2.0)) ==
        doctest::Approx(1.0 / M_PI).epsilon(1e-13));
  // frozen arbitrary-precision evaluation of the same Gamma expression
  CHECK(c1(FracParams(2, 0.75, 3.0)) ==
        doctest::Approx(0.26229879393510539604).epsilon(1e-13));
  CHECK(c1(FracParams(1, 0.5, 3.0)) ==
        doctest::Approx(0.38353712704243825185).epsilon(1e-13));
}

TEST_CASE("c1(n,s,2) coincides with the classical c_{n,s}") {
  for (int n = 1; n <= 4; ++n)
    for (double s = 0.1; s < 0.95; s += 0.1)
      CHECK(c1(FracParams(n, s, 2.0)) ==
            doctest::Approx(c_ns(n, s)).epsilon(1e-13));
}

TEST_CASE("constant_set satisfies the defining relations") {
  for (double s : {0.25, 0.5, 0.75})
    for (double p : {1.5, 2.0, 3.0})
      for (int n : {1, 2, 3}) {
        const FracParams pr(n, s, p);
        const ConstantSet c = constant_set(pr);
        const double sp = pr.sp;
        const double pin2 = std::pow(M_PI, 0.5 * n);
        CHECK(c.c2 == doctest::Approx(c.c1 * pin2 /
                                      (std::pow(2.0, sp) *
                                       gamma_fn(0.5 * (n + sp))))
                          .epsilon(1e-12));
        CHECK(c.c3 == doctest::Approx(c.c1 * pin2 * gamma_fn(0.5 * sp) /
                                      gamma_fn(0.5 * (n + sp)))
                          .epsilon(1e-12));
        CHECK(c.c4 == doctest::Approx(c.c1 * pin2 /
                                      (std::pow(2.0, sp) *
                                       gamma_fn(0.5 * (2.0 + sp)) *
                                       gamma_fn(0.5 * (n + sp))))
                          .epsilon(1e-12));
      }
}

TEST_CASE("p = 2 closed forms of C2, C3, C4") {
  for (double s = 0.1; s < 0.95; s += 0.1) {
    const ConstantSet c = constant_set(FracParams(1, s, 2.0));
    const double ag = std::fabs(gamma_fn(-s));
    CHECK(c.c2 == doctest::Approx(1.0 / ag).epsilon(1e-12));
    CHECK(c.c3 ==
          doctest::Approx(std::pow(4.0, s) * gamma_fn(s) / ag).epsilon(1e-12));
    CHECK(c.c4 == doctest::Approx(std::sin(s * M_PI) / M_PI).epsilon(1e-12));
  }
}

TEST_CASE("spot values at (n,s,p) = (1, 1/2, 2)") {
  const ConstantSet c = constant_set(FracParams(1, 0.5, 2.0));
  CHECK(c.c4 == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
  CHECK(c.c2 ==
        doctest::Approx(0.28209479177387814347).epsilon(1e-12)); // 1/(2 sqrt pi)
}

TEST_CASE("dimension independence of c2, c3, c4") {
  for (double s : {0.15, 0.5, 0.85})
    for (double p : {1.3, 2.0, 4.0}) {
      const ConstantSet base = constant_set(FracParams(1, s, p));
      for (int n = 2; n <= 5; ++n) {
        const ConstantSet c = constant_set(FracParams(n, s, p));
        CHECK(std::fabs(c.c2 - base.c2) <= 1e-12 * base.c2);
        CHECK(std::fabs(c.c3 - base.c3) <= 1e-12 * base.c3);
        CHECK(std::fabs(c.c4 - base.c4) <= 1e-12 * base.c4);
      }
    }
}

TEST_CASE("c2 against the explicit dimension-free expression") {
  // C2(s,p) = sqrt(pi) p / Gamma((p+1)/2) 2^{s(2-p)-2} / |Gamma(-s)|,
  // an independent route through the reflection formula
  for (double s : {0.2, 0.5, 0.8})
    for (double p : {1.5, 2.0, 3.5}) {
      const double expect = std::sqrt(M_PI) * p / gamma_fn(0.5 * (p + 1.0)) *
                            std::pow(2.0, s * (2.0 - p) - 2.0) /
                            std::fabs(gamma_fn(-s));
      CHECK(constant_set(FracParams(3, s, p)).c2 ==
            doctest::Approx(expect).epsilon(1e-12));
    }
}
