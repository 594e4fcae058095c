#pragma once

#include "resurgo/borel.hpp"
#include "resurgo/singulant.hpp"

namespace resurgo {

// Coefficient function handed to the Taylor marcher: its truncated Taylor
// expansion at a point.
using JetFn = std::function<Jet(const BigComplex& z0, size_t n)>;

JetFn ratfunc_jet(RatFunc f, BigComplex scale);
JetFn ratfunc_jet(RatFunc f);

// sum_d A_d(t) y^(d)(t) = B(t) with evaluable-jet coefficients; covers both
// the parametric ODE at fixed eps and equations in eps itself (Euler).
struct LinearODE {
  std::vector<JetFn> coeffs;  // A_0..A_D
  JetFn rhs;                  // may be empty (homogeneous)

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

LinearODE parametric_ode(const ODESpec& spec, const BigComplex& eps);

struct ODESolutionSample {
  ComplexPath path;
  std::vector<std::vector<BigComplex>> states;  // states[k][j] = y^(j) at sample k
  BigComplex epsilon;
  std::vector<BigFloat> step_errors;  // per-sample local truncation estimates

  const std::vector<BigComplex>& final_state() const { return states.back(); }
};

struct TaylorMarchConfig {
  int jet_order = 32;
  double safety = 0.25;     // fraction of the estimated convergence radius
  long max_steps = 400000;  // across the whole path
};

// Variable-step Taylor-series marching; local relative error is held below
// 2^(-prec/2) per step. Throws NumericalError on step-size underflow (path
// too close to a coefficient singularity).
ODESolutionSample integrate_linear_ode(const LinearODE& ode, const ComplexPath& path,
                                       const std::vector<BigComplex>& initial, Precision prec,
                                       const TaylorMarchConfig& config = {});

ODESolutionSample integrate_ode(const ODESpec& spec, const BigComplex& eps,
                                const ComplexPath& path, const std::vector<BigComplex>& initial,
                                const TaylorMarchConfig& config = {});

struct JumpMeasurement {
  BigComplex jump;    // laplace_sum(theta_below) - laplace_sum(theta_above)
  BigFloat noise;     // quadrature noise floor of the difference
  bool below_noise = false;
};

// Exponentially small jump across the ray between the two angles; equals the
// anticlockwise Hankel integral around the singularities swept. The two ray
// integrals share one quadrature scheme so the perturbative parts cancel.
JumpMeasurement measure_jump(const ComplexFn& yb, const BigComplex& y0, const BigComplex& eps,
                             const BigFloat& theta_below, const BigFloat& theta_above,
                             Precision prec, const LaplaceConfig& config = {});
JumpMeasurement measure_jump(const BorelGerm& germ, const BigComplex& eps,
                             const BigFloat& theta_below, const BigFloat& theta_above,
                             Precision prec, const LaplaceConfig& config = {});

// Late-coefficient models of a Borel germ (f_n = n-th Taylor coefficient):
//   Power:          f_n ~ C Gamma(n+alpha) / (Gamma(alpha) n! chi^n)
//   LogSingularity: f_n ~ C / (n chi^n)                 [phi(s) = log s]
//   LogSquared:     f_n ~ C (log n + c) / (n chi^n)     [phi(s) = log^2 s]
//   LogOverS:       f_n ~ C (log n + c) / chi^n         [phi(s) = log(s)/s]
enum class LateModel { Power, LogSingularity, LogSquared, LogOverS };

struct LateTermFit {
  LateModel model = LateModel::Power;
  BigComplex chi;
  BigComplex alpha;    // Power only
  BigComplex c_lead;   // amplitude C
  BigComplex c_const;  // additive constant c in the log bracket
  BigFloat residual;   // max relative deviation over the fit window
  size_t window_begin = 0, window_end = 0;
};

struct LateFitConfig {
  double window_fraction = 0.4;
  int richardson_depth = 4;
  double residual_threshold = 1e-3;
};

// Best candidate by residual; throws NumericalError when no candidate lands
// under the threshold (unrecognized singularity type).
LateTermFit late_term_fit(const Jet& coeffs, const std::vector<LateModel>& candidates,
                          const LateFitConfig& config = {});

const char* late_model_name(LateModel m);

}  // namespace resurgo
