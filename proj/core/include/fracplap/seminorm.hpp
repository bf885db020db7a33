#pragma once

#include <fracplap/funcs.hpp>
#include <fracplap/params.hpp>
#include <fracplap/quad.hpp>
#include <fracplap/reps.hpp>

namespace fracplap {

struct SeminormReport {
  EvalResult direct;
  EvalResult semigroup;
  EvalResult balakrishnan;
};

/// Gagliardo seminorm (C1 double integral)^{1/p}; 1-D, decaying u only.
EvalResult seminorm_direct(const TestFunction& u, const FracParams& params,
                           const QuadConfig& cfg);

/// Heat-semigroup form of the same seminorm (C2 constant).
EvalResult seminorm_semigroup(const TestFunction& u, const FracParams& params,
                              const QuadConfig& cfg);

/// Balakrishnan form (C4 constant).
EvalResult seminorm_balakrishnan(const TestFunction& u,
                                 const FracParams& params,
                                 const QuadConfig& cfg);

SeminormReport seminorm_all(const TestFunction& u, const FracParams& params,
                            const QuadConfig& cfg);

} // namespace fracplap
