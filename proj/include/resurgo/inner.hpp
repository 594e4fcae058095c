#pragma once

#include "resurgo/singulant.hpp"

namespace resurgo {

// Exact local exponents at a boundary-layer point z_star:
//   gamma: zero order of chi, delta: pole order of y_1, beta: indicial
//   exponent of the a_0 transport ODE, alpha = (beta + delta) / gamma.
struct LocalExponents {
  long gamma = 1;
  long delta = 0;
  GaussianRational beta{0};
  GaussianRational alpha{0};

  bool alpha_is_positive_integer() const {
    return alpha.is_real() && alpha.real().get_den() == 1 && alpha.real() > 0;
  }
  long alpha_int() const { return static_cast<long>(alpha.real().get_num().get_si()); }
  BigComplex alpha_value(Precision prec) const { return alpha.value(prec); }
};

// Snap a numeric limit to a small rational; throws NumericalError when no
// rational with denominator <= max_den sits within tol.
GaussianRational snap_rational(const BigComplex& x, unsigned max_den = 64, double tol = 1e-8);

// beta from the transport equation q'(-chi') a0' = (chi''/2) q''(-chi') a0 as
// the residue of its logarithmic derivative at z_star; delta exactly from the
// rational y1; gamma from the branch.
LocalExponents local_exponents(const SingulantEquation& eq, const SingulantBranch& branch,
                               const RatFunc& y1);

// Symbolic record of the N = 2 saddle-coefficient recurrences
//   (P - 2 chi') a_0' - chi'' a_0 = 0,
//   (n - alpha)(P - 2 chi') a_n' + a_{n-1}'' - chi''(n - alpha) a_n = 0,
// with P = P_1/P_2 and everything normalized by the leading coefficient.
struct CoefficientRecurrence {
  RatFunc p;  // P_1/P_2
  RatFunc q;  // P_0/P_2
  GaussianRational alpha;
  // Indices n == alpha (integer alpha) are unconstrained by the recurrence
  // and must come from matching.
  std::vector<long> unconstrained() const {
    if (alpha.is_real() && alpha.real().get_den() == 1 && alpha.real() > 0)
      return {static_cast<long>(alpha.real().get_num().get_si())};
    return {};
  }
};

CoefficientRecurrence coefficient_recurrence(const ODESpec& spec, const GaussianRational& alpha);

// k-th Borel inner ODE around (z_star, chi): polynomial coefficients in s per
// derivative order, with initial data at s = 0 read from the perturbative
// germ. The singular point s = 1 carries the exponent alpha.
struct InnerProblem {
  int k = 0;
  GaussianRational alpha{0};
  std::vector<Jet> ode;        // ode[d] = polynomial (in s) multiplying phi^(d)
  std::vector<BigComplex> initial;  // phi_k(0), phi_k'(0), ... (order-1 values)
};

// Local monomial model chi ~ chi0 (z - z_star)^gamma used for the rescaling.
struct InnerLocalModel {
  BigComplex z_star;
  BigComplex chi0;
  long gamma = 1;
  BigComplex p0;  // P ~ P0 (z-z_star)^(gamma-1)
  BigComplex q0;  // Q ~ Q0 (z-z_star)^(2gamma-2)
};

// Extracts the local model from the spec at z_star (orders checked) for
// N = 2; N = 1 uses the first-order rescaling.
InnerLocalModel inner_local_model(const ODESpec& spec, const SingulantBranch& branch);

InnerProblem build_inner_problem(const ODESpec& spec, const InnerLocalModel& model,
                                 const PerturbativeSeries& series, const LocalExponents& exponents,
                                 int k);

// Taylor coefficients phi_{k,0..M} at s = 0 from the ODE recurrence; throws
// when s = 0 is a singular point (nested boundary layer).
Jet solve_inner_series(const InnerProblem& problem, int M);

struct ConnectionFitConfig {
  double window_fraction = 0.4;  // tail share of the coefficients used
  int richardson_depth = 3;
  double stability_tol = 1e-6;  // C0 shift across half-window offsets
};

// Constants C_i of phi(s) = (1-s)^(-alpha) (C_0 + C_1 (1-s) + ...) from the
// late Taylor coefficients, via g_i(n) = Gamma(n+alpha-i)/(Gamma(alpha-i) n!)
// peeling with Richardson acceleration. For integer alpha only the
// identifiable range i < alpha is returned.
std::vector<BigComplex> connection_constants(const Jet& phi_coeffs, const BigComplex& alpha,
                                             int depth, const ConnectionFitConfig& config = {});

// Frobenius ratios b_m/b_0 of the singular solution (1-s)^(-alpha) sum b_m
// (1-s)^m about s = 1, up to (not including) the resonance at integer alpha.
std::vector<BigComplex> frobenius_ratios_at_one(const InnerProblem& problem, int count);

struct CoefficientTrack {
  int index = 0;
  std::vector<BigComplex> values;  // a_index along the path samples
  BigComplex initial_value;        // a_index at the path start
  bool matched = false;            // filled from inner matching (vs propagated)
};

// Integrates the N = 2 recurrence chain along the path (jet marching; each
// a_n sourced by a_{n-1}''), seeded with the given values at path[0]. For
// integer alpha the chain stops below the unconstrained index.
std::vector<CoefficientTrack> propagate_coefficients(const SingulantEquation& eq,
                                                     const CoefficientRecurrence& rec,
                                                     const std::vector<BigComplex>& init_values,
                                                     const BigComplex& lambda_start,
                                                     const ComplexPath& path);

}  // namespace resurgo
