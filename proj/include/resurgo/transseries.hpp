#pragma once

#include "resurgo/inner.hpp"
#include "resurgo/validate.hpp"

namespace resurgo {

// One exponential sector of the trans-series: a singulant branch with its
// exponents and matched coefficient tracks; enough to evaluate the Stokes
// jump at any path sample to the stored order.
struct TransSeriesComponent {
  SingulantBranch branch;
  LocalExponents exponents;
  // tracks[i].values[k] corresponds to branch.path.samples[offset + k]; the
  // coefficient tracks start a little off z_star where they are seeded.
  size_t offset = 0;
  std::vector<CoefficientTrack> tracks;
  int truncation_order = 0;

  size_t sample_index(const BigComplex& z) const;  // throws if z is not a path sample
  BigComplex chi_at(const BigComplex& z) const;
  BigComplex track_at(size_t i, const BigComplex& z) const;
};

// Shared Hankel-lemma normalization used by every jump formula:
//   2 pi i e^(-chi/eps) eps^(1-alpha) sum_i eps^i a_i / Gamma(alpha - i).
// Terms with alpha - i a nonpositive integer vanish (1/Gamma = 0), which is
// how integer-alpha asymptotics terminate.
BigComplex jump_prefactor(const BigComplex& alpha, const BigComplex& eps, const BigComplex& chi,
                          const std::vector<BigComplex>& a_values);

// Predicted Stokes jump of a component at a point of its path.
BigComplex stokes_jump(const TransSeriesComponent& component, const BigComplex& z,
                       const BigComplex& eps, int order);

// Leading-order switching for the late-term ansatz of corollary form:
// y_{n+1} ~ n^(alpha-1) n! (-1)^alpha a(z) / (chi^(n+alpha) Gamma(alpha)),
// same code path as stokes_jump order 0.
BigComplex corollary_switch(const BigComplex& alpha, const BigComplex& a0, const BigComplex& chi,
                            const BigComplex& eps);

// General switching 2 pi i eps g(chi/eps, z) e^(-chi/eps) for a fitted
// late-term model g(n, z) (beyond power-law singularities).
struct SwitchForm {
  BigComplex value;
  // structural reading: value = coeff * 2 pi i * eps^eps_power *
  // log(eps)^log_power * e^(-chi/eps) (+ lower-order parts)
  BigComplex coeff;
  int eps_power = 1;
  int log_power = 0;
};
SwitchForm general_switch(const LateTermFit& fit, const BigComplex& chi, const BigComplex& eps);

// Closed-form Borel transform of eps y' + G y = eps H:
//   y_B(w, z) = (H/G)(zeta), zeta = chi^{-1}(chi(z) - w), chi = int G.
// zeta is found by Newton with stepwise homotopy in w (branch-tracked).
BigComplex first_order_closed_form(const RatFunc& G, const RatFunc& H, const BigComplex& w,
                                   const BigComplex& z);

// Inhomogeneous first-order solution via the explicit integral
//   y_B(w, z) = H0(z - w) + int_{z-w}^{z} H_B(w - z + t, t) dt,
// for entire H_B (the Borel transform of an eps-dependent forcing).
using ParametricFn = std::function<BigComplex(const BigComplex&, const BigComplex&)>;
BigComplex inhomogeneous_borel_integral(const ParametricFn& H_B, const ComplexFn& H0,
                                        const BigComplex& w, const BigComplex& z, Precision prec);

// Assembles the trans-series component for a branch of a second-order
// problem: local exponents, inner problems at k = gamma * i, Van Dyke
// constants, and propagated tracks along the branch path.
struct ComponentBuildConfig {
  int inner_terms = 400;    // Taylor length of each inner solution
  int max_tracks = 4;       // upper bound when alpha is not a positive integer
  int constant_depth = 3;   // connection constants per inner solve
};

TransSeriesComponent build_component(const ODESpec& spec, const SingulantEquation& eq,
                                     const PerturbativeSeries& series,
                                     const SingulantBranch& branch,
                                     const ComponentBuildConfig& config = {});

}  // namespace resurgo
