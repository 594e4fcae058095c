#pragma once

#include "resurgo/pade.hpp"
#include "resurgo/quadrature.hpp"

namespace resurgo {

// One Borel-Laplace ray sum: value of y0 + int_{l_theta} e^(-w/eps) yb(w) dw.
struct RaySum {
  BigComplex epsilon;
  BigFloat theta;
  BigComplex value;
  BigFloat error;  // nested-quadrature estimate
};

struct RayHitsSingularity : NumericalError {
  using NumericalError::NumericalError;
};

struct LaplaceConfig {
  // Singularities the ray must stay clear of; the germ route adds the
  // approximant's significant poles automatically.
  std::vector<BigComplex> singularities;
  double tube = 0.0;       // clearance radius; 0 derives |eps|/8
  double tail_bits = 48;   // integrate until e^(-w/eps) drops this far below 2^-prec
  double residue_gate = 1e-25;  // poles with smaller relative residue are noise
};

RaySum laplace_sum(const ComplexFn& yb, const BigComplex& y0, const BigComplex& eps,
                   const BigFloat& theta, Precision prec, const LaplaceConfig& config = {});
// Continues the germ by a near-diagonal Pade approximant, then integrates.
RaySum laplace_sum(const BorelGerm& germ, const BigComplex& eps, const BigFloat& theta,
                   Precision prec, const LaplaceConfig& config = {});

struct HankelQuadConfig {
  // Cut direction away from the singularity; 0 means radially outward.
  BigComplex direction{2};
  double half_width = 0.0;  // 0 derives |eps|/4
  double tail_bits = 48;
};

// Anticlockwise loop integral \oint e^(-w/eps) f(w) dw on a stadium wrapping
// the cut from chi; for power-law f this matches the Gamma-normalized
// switching expansion.
QuadratureResult hankel_quadrature(const ComplexFn& f, const BigComplex& chi,
                                   const BigComplex& eps, Precision prec,
                                   const HankelQuadConfig& config = {});

// A singularity of f in the x-plane for the coefficient formula; either a ray
// cut (w-plane direction `direction`, default +1) or a finite cut to
// `cut_to`.
struct HankelSite {
  BigComplex x;
  std::optional<BigComplex> cut_to;
  std::optional<BigComplex> direction;
};

struct CoeffHankelConfig {
  double half_width = 0.0;  // 0 derives from site spacing
  double tail_bits = 40;
};

// n-th Taylor coefficient of f about x = 0 from Hankel loops around its
// singularities on the w = log x cylinder:
//   f_n = (1/2 pi i) sum_sites \oint e^(-w n) f(e^w) dw.
BigComplex coefficients_via_hankel(const ComplexFn& f_x, const std::vector<HankelSite>& sites,
                                   unsigned long n, Precision prec,
                                   const CoeffHankelConfig& config = {});

}  // namespace resurgo
