#pragma once

#include <fracplap/funcs.hpp>
#include <fracplap/params.hpp>
#include <fracplap/quad.hpp>

#include <array>
#include <string>
#include <vector>

namespace fracplap {

/// Uniform lattice sample of a function on a box, with a total extension
/// rule for offsets that leave the stored box.
class GridFunction {
public:
  /// Samples u on the box of lattice points origin + h*beta, |beta_i| <= radius,
  /// extending with u itself outside.
  GridFunction(const TestFunction& u, const Vec& origin, double h, int radius);

  /// Zero extension outside the stored box.
  void set_zero_extension() { zero_extension_ = true; }

  double at_offset(const std::array<int, 2>& beta) const;
  const TestFunction& source() const { return *u_; }
  bool zero_extended() const { return zero_extension_; }
  double spacing() const { return h_; }
  int dim() const { return n_; }
  int radius() const { return radius_; }
  const Vec& origin() const { return origin_; }
  /// sup of |values| over the stored box.
  double sup() const;

private:
  int n_;
  Vec origin_;
  double h_;
  int radius_;
  bool zero_extension_ = false;
  std::vector<double> values_; // row-major over the box
  const TestFunction* u_;
  int index(const std::array<int, 2>& beta) const;
};

/// Discrete Laplacian at the grid origin offset beta:
/// sum_i (u(x+h e_i) + u(x-h e_i) - 2 u(x)) / h^2.
double discrete_laplacian(const GridFunction& g, const std::array<int, 2>& beta);

/// Discrete heat semigroup weight G(beta,t) = e^{-2nt} prod_i I_{|beta_i|}(2t),
/// evaluated in exponentially scaled form.
double semigroup_weight(const std::array<int, 2>& beta, double t, int n);

/// The quadrature weights of the finite-difference operator.
struct DiscreteWeights {
  FracParams params;
  double h;
  double delta;    // lower truncation in the grid-time variable
  int stencil;     // weights kept for 0 < |beta|_inf <= stencil
  std::vector<double> w1d;              // n = 1: w1d[m-1] = K_{m}
  std::vector<std::vector<double>> w2d; // n = 2: w2d[m1][m2], m1 >= m2 >= 0
  double tail_bound;    // bound on the neglected |beta| > stencil contribution
  double tail_ksum = 0; // n = 1: sum_{m > stencil} K_m, exact via sum_m G = 1

  double weight(const std::array<int, 2>& beta) const;
  std::string to_csv() const;
};

/// Builds K_{beta,h,delta} = (C2 / h^{sp}) int_delta^inf G(beta,tau)
/// dtau / tau^{1+sp/2}. delta = 0 requires sp < 2; otherwise the weights
/// diverge and a DivergenceError("weights_diverge ...") is thrown.
DiscreteWeights build_weights(const FracParams& params, double h, double delta,
                              int stencil, const QuadConfig& cfg);

struct DiscreteValue {
  double value;
  double tail_bound;
};

/// (-Delta_h)_p^s u at the grid point origin + h*beta.
DiscreteValue apply_discrete(const GridFunction& g,
                             const std::array<int, 2>& beta,
                             const DiscreteWeights& w);

} // namespace fracplap
