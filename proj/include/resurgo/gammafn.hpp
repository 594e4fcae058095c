#pragma once

#include <gmpxx.h>

#include "resurgo/quadrature.hpp"

namespace resurgo {

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2), cached.
const mpq_class& bernoulli(unsigned n);
// Bernoulli polynomial B_n(x) evaluated at a numeric point.
BigComplex bernoulli_poly(unsigned n, const BigComplex& x);

// Principal log-gamma via the Stirling series with argument promotion and the
// reflection formula on the left half-plane.
BigComplex log_gamma(const BigComplex& z);
BigComplex gamma(const BigComplex& z);
// 1/Gamma; returns 0 at nonpositive integers.
BigComplex reciprocal_gamma(const BigComplex& z);

// Truncated asymptotic expansion of Gamma(n+alpha)/Gamma(n+1):
//   n^(alpha-1) * (1 + alpha(alpha-1)/(2n) + ...)
// including terms through 1/n^order. Exact rational ratios at integer alpha.
BigComplex gamma_ratio_expansion(unsigned long n, const BigComplex& alpha, int order);

struct HankelLoopConfig {
  double half_width = 1.0;    // stadium half-width h
  double tail_decades = 0.0;  // extra e^-t decay beyond precision, in bits (0 = auto)
  int max_level = 12;         // tanh-sinh refinement cap
};

// Numerical Hankel representation -(1/2pi i) \oint (-t)^(-alpha) e^(-t) dt of
// the reciprocal gamma function; the loop wraps the positive real axis.
BigComplex reciprocal_gamma_hankel(const BigComplex& alpha, const HankelLoopConfig& config = {},
                                   Precision prec = default_precision());

}  // namespace resurgo
