#pragma once

#include <fracplap/funcs.hpp>
#include <fracplap/params.hpp>
#include <fracplap/quad.hpp>
#include <fracplap/reps.hpp>

namespace fracplap {

/// The 1-D domain Omega = (0, L) with its Dirichlet eigendata.
struct Interval {
  double length = 4.0;
  int eigen_count = 512; // hard cap for the sine series truncation

  double lambda1() const {
    const double k = M_PI / length;
    return k * k;
  }
};

/// Dirichlet heat kernel K_Omega(t,x,y): sine series for large t, method of
/// images for small t (the series converges slowly as t -> 0).
double dirichlet_heat_kernel(double t, double x, double y, const Interval& dom,
                             double abs_tol);

/// int_Omega K_Omega(t,x,.) f by adaptive quadrature.
double dirichlet_heat_apply(const std::function<double(double)>& f, double x,
                            double t, const Interval& dom,
                            const QuadConfig& cfg);

/// Spectral-type fractional p-Laplacian on (0, L): the subordination formula
/// with the Dirichlet semigroup in place of the whole-space one.
EvalResult eval_spectral(const TestFunction& u, double x,
                         const FracParams& params, const Interval& dom,
                         const QuadConfig& cfg);

/// Whole-space operator applied to the zero extension of u outside (0, L).
EvalResult eval_restricted(const TestFunction& u, double x,
                           const FracParams& params, const Interval& dom,
                           const QuadConfig& cfg);

/// Zero extension of u outside (0, L) as a TestFunction (the extension is
/// discontinuous at the boundary unless u vanishes there with C^1 matching).
TestFunction restrict_to_interval(const TestFunction& u, const Interval& dom);

} // namespace fracplap
