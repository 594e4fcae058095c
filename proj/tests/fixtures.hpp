#pragma once

// Shared problem fixtures: the worked second-order equation, the Euler-type
// first-order equation, the coalescing-forcing equation, and closed-form
// germ builders used as independent oracles.

#include "resurgo/io.hpp"
#include "resurgo/perturbative.hpp"

namespace fixtures {

using namespace resurgo;

// eps^2 y'' - 3 z eps y' + 2 z^2 y = z.
inline ODESpec worked_example() {
  ODESpec spec;
  spec.order = 2;
  spec.coeffs = {parse_ratfunc("2z^2"), parse_ratfunc("-3z"), RatFunc(1)};
  spec.forcing = {RatFunc::variable()};
  return spec;
}

// eps y' + y = eps/(1-z): germ at z = 0 is 1/(1+w), the Euler series.
inline ODESpec euler_like() {
  ODESpec spec;
  spec.order = 1;
  spec.coeffs = {RatFunc(1), RatFunc(1)};
  spec.forcing = {RatFunc(), parse_ratfunc("1/(1-z)")};
  return spec;
}

// eps y' + y = eps H(z; eps), H = z/((z + D eps)(z - D eps)) truncated to K
// odd orders: F_{2k+1} = D^(2k) z^(-2k-1).
inline ODESpec coalescing(long delta_num, long delta_den, int K) {
  ODESpec spec;
  spec.order = 1;
  spec.coeffs = {RatFunc(1), RatFunc(1)};
  spec.forcing = {RatFunc()};
  GaussianRational d2(delta_num * delta_num, delta_den * delta_den);
  GaussianRational dpow(1);
  for (int k = 0; 2 * k + 1 <= K; ++k) {
    spec.forcing.push_back(RatFunc(Poly(dpow)) /
                           RatFunc(Poly::monomial(GaussianRational(1), 2 * k + 1)));
    spec.forcing.push_back(RatFunc());
    dpow = dpow * d2;
  }
  spec.forcing.pop_back();
  return spec;
}

// Example with y_B = 1/((w - z)(w - (z^2 - 1))): perturbative terms by exact
// partial fractions, u_n = [1/(z^2-1-z)] ((z^2-1)^(-n-1) - z^(-n-1)).
inline PerturbativeSeries pole_pair_series(int M) {
  RatFunc z = RatFunc::variable();
  RatFunc chi2 = z * z - RatFunc(1);
  RatFunc gap = z - chi2;
  PerturbativeSeries s;
  s.terms.push_back(RatFunc());  // y_0 = 0 (pure order-eps start)
  RatFunc zp = z, cp = chi2;
  mpq_class fact(1);
  for (int n = 0; n <= M; ++n) {
    if (n > 1) fact *= n;
    // u_n = (1/gap)(1/cp ... ) ; y_{n+1} = n! u_n
    RatFunc un = (RatFunc(1) / cp - RatFunc(1) / zp) / gap;
    s.terms.push_back(un * RatFunc(GaussianRational(mpq_class(fact), mpq_class(0))));
    zp *= z;
    cp *= chi2;
  }
  return s;
}

// Taylor coefficients of the Table-2 row germs at a real z (exact forms).
//   row 1: f_n = -e^(-n z)/n            [y_B = log(e^z - w)]
//   row 2: f_n = (2/n) e^(-n z)(H_{n-1} - z)
//   row 3: f_n = e^(-(n+1) z)(z - H_n)  [y_B = log(e^z-w)/(e^z-w)]
inline Jet table2_germ(int row, const BigFloat& z, size_t count) {
  Precision prec = z.precision();
  Jet out;
  BigFloat ez = exp(-z);
  BigFloat en(1L, prec);  // e^(-n z)
  BigFloat H(0L, prec);   // H_{n-1} entering step n
  for (size_t n = 0; n < count; ++n) {
    BigComplex v(prec);
    BigFloat nn(static_cast<long>(n), prec);
    if (n == 0) {
      if (row == 1) v = BigComplex(z, BigFloat(0L, prec));
      if (row == 2) v = BigComplex(z * z, BigFloat(0L, prec));
      if (row == 3) v = BigComplex(z * ez, BigFloat(0L, prec));
    } else {
      if (row == 1) v = BigComplex(-en / nn, BigFloat(0L, prec));
      if (row == 2) v = BigComplex((H - z) * 2L * en / nn, BigFloat(0L, prec));
      if (row == 3) {
        BigFloat hn = H + BigFloat(1L, prec) / nn;
        v = BigComplex((z - hn) * en * ez, BigFloat(0L, prec));
      }
      H += BigFloat(1L, prec) / static_cast<long>(n);
    }
    out.push_back(v);
    en *= ez;
  }
  return out;
}

// Germ of the inverse-exponential-integral equation eps y' + (e^z/z) y = eps:
// y_B = zeta e^(-zeta) with zeta' = -zeta e^(-zeta), zeta(0) = z (jet ODE).
inline Jet ei_inverse_germ(const BigComplex& z, size_t count) {
  Precision prec = z.precision();
  Jet zeta{z};
  zeta.resize(count, BigComplex(prec));
  // zeta_{m+1} = -(1/(m+1)) [zeta * exp(-zeta)]_m, iterated to closure.
  for (size_t m = 0; m + 1 < count; ++m) {
    Jet ez = jet_exp(jet_scale(zeta, BigComplex(-1L, 0L, prec)), m + 1);
    Jet prod = jet_mul(zeta, ez, m + 1);
    zeta[m + 1] = -prod[m] / static_cast<long>(m + 1);
  }
  Jet ez = jet_exp(jet_scale(zeta, BigComplex(-1L, 0L, prec)), count);
  return jet_mul(zeta, ez, count);
}

}  // namespace fixtures
