#pragma once

#include <fracplap/constants.hpp>
#include <fracplap/funcs.hpp>
#include <fracplap/params.hpp>
#include <fracplap/quad.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fracplap {

struct EvalResult {
  double value = 0.0;
  double error = 0.0;
};

/// Which numerator the pair machinery evaluates:
/// odd_power  : Phi_p(u(x) - u(y))   (the operator representations)
/// abs_power  : |u(x) - u(y)|^p      (the Gagliardo seminorms)
enum class PairKind { odd_power, abs_power };

/// The shared functor v_x(y) behind all representations, organized around
/// antipodal pairs y = x +- rho*omega. The pair sum is evaluated through a
/// series in the second difference, which keeps it accurate where naive
/// evaluation loses all significant digits (rho -> 0).
class DifferencePairs {
public:
  DifferencePairs(const TestFunction& u, const Vec& x, double p,
                  PairKind kind);

  /// v(x + rho*omega) + v(x - rho*omega), stable for all rho > 0.
  double pair_sum(const Vec& omega, double rho) const;

  /// Full angular integral S(r) = oint v(x + r*omega) dsigma(omega).
  /// 1-D: v(x+r) + v(x-r). 2-D: trapezoid over 64 half-step-offset angles.
  double ring(double r) const;

  /// Closed form of int_0^{r_head} S_T(r) r^{-1-sp} dr from the Taylor
  /// model; the quadrature sweep takes over at r_head.
  double singular_head(double sp) const;
  double r_head() const { return r_head_; }

  /// Smallest decay exponent of the pair numerators at r -> 0:
  /// p where the directional derivative is nonzero, 2p-2 where it vanishes.
  double leading_exponent() const;

  double grad_norm() const { return grad_.norm(); }
  double value_at_x() const { return ux_; }
  /// Bound on |S(r)|: angular measure times (2 sup|u|)^{p-1} (odd kind)
  /// or (2 sup|u|)^p (abs kind).
  double sup_ring() const;
  int dim() const { return x_.n; }
  const Vec& x() const { return x_; }
  const TestFunction& u() const { return *u_; }
  double p() const { return p_; }
  PairKind kind() const { return kind_; }

  /// log-radii where the ring support shell sits (compactly supported u);
  /// quadrature windows pre-split there so narrow shells are never missed.
  std::vector<double> focus_log_radii() const;

private:
  struct PairDir {
    Vec omega;
    double weight; // angular weight covering omega and -omega
    double g;      // grad u(x) . omega
    double q;      // omega^T D^2u(x) omega
  };
  double head_pair(const PairDir& d, double sp, double r0) const;

  const TestFunction* u_;
  Vec x_;
  double p_;
  PairKind kind_;
  double ux_;
  Vec grad_;
  Mat hess_;
  std::vector<PairDir> pairs_;
  double r_switch_ = 1e-5; // below: Taylor surrogate from derivatives at x
  double r_head_ = 1e-5;   // below: closed-form head integral
};

/// Refuses evaluation outside the theorem hypotheses: small-p regime with a
/// vanishing gradient, or a non-integrable critical direction.
void check_hypotheses(const DifferencePairs& v, const FracParams& params);

/// Direct principal-value representation (symmetrized radial quadrature).
EvalResult eval_direct(const TestFunction& u, const Vec& x,
                       const FracParams& params, const QuadConfig& cfg);

/// Heat-semigroup splitting representation.
EvalResult eval_semigroup(const TestFunction& u, const Vec& x,
                          const FracParams& params, const QuadConfig& cfg);

/// Extension (Poisson kernel) limit representation.
EvalResult eval_extension(const TestFunction& u, const Vec& x,
                          const FracParams& params, const QuadConfig& cfg);

/// Balakrishnan resolvent representation.
EvalResult eval_balakrishnan(const TestFunction& u, const Vec& x,
                             const FracParams& params, const QuadConfig& cfg);

/// Extension operator E_{s,p}[f](x,y) for bounded f, computed both as the
/// Poisson convolution and through the heat subordination form; returns the
/// convolution value and throws if the two disagree beyond tolerance.
double extension_apply(const std::function<double(const Vec&)>& f,
                       const Vec& x, double y, const FracParams& params,
                       const QuadConfig& cfg);

/// |symmetrized integral over {|z| < 1}| without the C1 factor; the
/// left-hand side of the pointwise appendix bounds.
double truncated_symmetrized_integral(const TestFunction& u, const Vec& x,
                                      const FracParams& params,
                                      const QuadConfig& cfg);

struct LimitRow {
  double s;
  double value;
  double target;
  double gap;
};

/// gap(s) = |direct evaluation at (1,s,p) - (-Delta_p u(x))| over s_list.
std::vector<LimitRow> limit_experiment_s_to_1(const TestFunction& u, double x,
                                              double p,
                                              const std::vector<double>& s_list,
                                              const QuadConfig& cfg);

struct RepValue {
  EvalResult result;
  std::string error; // nonempty when this representation failed
  bool ok() const { return error.empty(); }
};

/// Per-point results of all four representations with pairwise gaps.
struct EvalReport {
  Vec x;
  RepValue direct, semigroup, extension, balakrishnan;
  std::string skipped; // nonempty when hypotheses fail for the whole point

  double max_pairwise_gap() const;
  double error_sum() const;
};

EvalReport evaluate_all(const TestFunction& u, const Vec& x,
                        const FracParams& params, const QuadConfig& cfg);

} // namespace fracplap
