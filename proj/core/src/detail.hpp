#pragma once

#include <fracplap/params.hpp>
#include <fracplap/quad.hpp>
#include <fracplap/reps.hpp>

namespace fracplap::detail {

// int_0^inf S(r) r^{-1-sp} dr: closed-form head plus windowed sweep.
QuadResult radial_power_integral(const DifferencePairs& v, double sp,
                                 const QuadConfig& cfg);

// int_0^inf e^{tDelta}[v](x) dt/t^{1+sp/2} with the swapped spatial tail.
QuadResult subordination_integral(const DifferencePairs& v,
                                  const FracParams& params,
                                  const QuadConfig& cfg);

// int_0^inf (R_t * v)(x) dt/t^{1-sp/2} with the swapped spatial head.
QuadResult balakrishnan_integral(const DifferencePairs& v,
                                 const FracParams& params,
                                 const QuadConfig& cfg);

} // namespace fracplap::detail
