#include "resurgo/gammafn.hpp"

#include "resurgo/rational.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace resurgo {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

const mpq_class& bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1), mpq_class(-1, 2)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    unsigned m = static_cast<unsigned>(table.size());
    if (m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    mpq_class acc(0);
    for (unsigned k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * table[k];
    mpq_class b = -acc / mpq_class(binomial(m + 1, m));
    b.canonicalize();
    table.push_back(std::move(b));
  }
  return table[n];
}

BigComplex bernoulli_poly(unsigned n, const BigComplex& x) {
  Precision prec = x.precision();
  BigComplex acc(prec);
  for (unsigned k = 0; k <= n; ++k) {
    mpq_class c = mpq_class(binomial(n, k)) * bernoulli(k);
    acc += GaussianRational(c).value(prec) * pow(x, static_cast<long>(n - k));
  }
  return acc;
}

namespace {

// Stirling series tail for log Gamma, valid for comfortably large Re(z).
BigComplex stirling_log_gamma(const BigComplex& z) {
  Precision prec = z.precision();
  BigComplex half(0.5, 0.0, prec);
  BigComplex two_pi = BigComplex(BigFloat::pi(prec) * 2L, BigFloat(0L, prec));
  BigComplex acc = (z - half) * log(z) - z + log(two_pi) * half;
  BigComplex zinv = BigComplex(1L, 0L, prec) / z;
  BigComplex zpow = zinv;
  BigComplex z2 = zinv * zinv;
  BigFloat floor_val = abs(acc) * BigFloat::pow2(-(prec + 8), prec);
  BigFloat last(0L, prec);
  for (unsigned k = 1; k <= 4096; ++k) {
    mpq_class c = bernoulli(2 * k) / mpq_class(2 * k * (2 * k - 1));
    BigComplex term = GaussianRational(c).value(prec) * zpow;
    acc += term;
    BigFloat mag = abs(term);
    if (mag <= floor_val) break;
    if (k > 2 && mag > last)
      throw NumericalError("log_gamma: Stirling series diverging (argument shift too small)");
    last = mag;
    zpow *= z2;
  }
  return acc;
}

bool near_nonpositive_integer(const BigComplex& z, long* which) {
  Precision prec = z.precision();
  if (z.real().sign() > 0 && z.real() > BigFloat(0.5, prec)) return false;
  BigFloat r = z.real();
  BigFloat rounded = floor(r + BigFloat(0.5, prec));
  if (rounded.sign() > 0) return false;
  BigFloat tol = BigFloat::pow2(-(prec - 8), prec);
  if (abs(r - rounded) <= tol && abs(z.imag()) <= tol) {
    if (which) *which = rounded.to_long();
    return true;
  }
  return false;
}

}  // namespace

BigComplex log_gamma(const BigComplex& z) {
  Precision prec = z.precision();
  if (near_nonpositive_integer(z, nullptr))
    throw NumericalError("log_gamma: pole at nonpositive integer");
  // Reflection for the left half-plane: log Gamma(z) =
  // log(pi/sin(pi z)) - log Gamma(1-z), up to 2*pi*i multiples which callers
  // remove by exponentiating.
  if (z.real().sign() < 0) {
    BigComplex pi_c(BigFloat::pi(prec), BigFloat(0L, prec));
    BigComplex one(1L, 0L, prec);
    BigComplex s = exp(BigComplex::i(prec) * pi_c * z);
    BigComplex sin_pz = (s - one / s) / (BigComplex::i(prec) * 2L);
    return log(pi_c / sin_pz) - log_gamma(one - z);
  }
  // Promote until the Stirling tail converges below the precision floor.
  double need = (static_cast<double>(prec) + 60.0) / 9.0 + 4.0;
  long shift = 0;
  double re = z.real().to_double();
  double im = std::abs(z.imag().to_double());
  if (std::hypot(re, im) < need) shift = static_cast<long>(need - re) + 1;
  BigComplex zs = z + BigComplex(shift, 0L, prec);
  BigComplex lg = stirling_log_gamma(zs);
  // Remove the promotion: Gamma(z) = Gamma(z+n) / (z (z+1) ... (z+n-1)).
  BigComplex prod(1L, 0L, prec);
  for (long k = 0; k < shift; ++k) prod *= z + BigComplex(k, 0L, prec);
  return lg - log(prod);
}

BigComplex gamma(const BigComplex& z) {
  Precision prec = z.precision();
  if (z.imag().is_zero() && z.real().sign() > 0) {
    BigFloat g(prec);
    mpfr_gamma(g.raw(), z.real().raw(), MPFR_RNDN);
    return BigComplex(std::move(g), BigFloat(0L, prec));
  }
  return exp(log_gamma(z));
}

BigComplex reciprocal_gamma(const BigComplex& z) {
  Precision prec = z.precision();
  if (near_nonpositive_integer(z, nullptr)) return BigComplex(prec);
  return BigComplex(1L, 0L, prec) / gamma(z);
}

BigComplex gamma_ratio_expansion(unsigned long n, const BigComplex& alpha, int order) {
  Precision prec = alpha.precision();
  // log(Gamma(n+a)/Gamma(n+1) * n^(1-a)) =
  //   sum_{k>=1} (-1)^(k+1) (B_{k+1}(a) - B_{k+1}(1)) / (k(k+1)) n^-k.
  // Exponentiate as a truncated power series in 1/n, then evaluate.
  std::vector<BigComplex> logser(order + 1, BigComplex(prec));
  for (int k = 1; k <= order; ++k) {
    BigComplex num = bernoulli_poly(k + 1, alpha) - bernoulli_poly(k + 1, BigComplex(1L, 0L, prec));
    BigComplex c = num / static_cast<long>(k) / static_cast<long>(k + 1);
    logser[k] = (k % 2 == 1) ? c : -c;
  }
  // exp of the series, truncated at `order`.
  std::vector<BigComplex> e(order + 1, BigComplex(prec));
  e[0] = BigComplex(1L, 0L, prec);
  for (int m = 1; m <= order; ++m) {
    BigComplex acc(prec);
    for (int k = 1; k <= m; ++k) acc += logser[k] * e[m - k] * static_cast<long>(k);
    e[m] = acc / static_cast<long>(m);
  }
  BigComplex ninv = BigComplex(1L, 0L, prec) / BigComplex(static_cast<long>(n), 0L, prec);
  BigComplex poly(prec);
  for (int m = order; m >= 0; --m) poly = poly * ninv + e[m];
  BigComplex nc(static_cast<long>(n), 0L, prec);
  return pow(nc, alpha - BigComplex(1L, 0L, prec)) * poly;
}

BigComplex reciprocal_gamma_hankel(const BigComplex& alpha, const HankelLoopConfig& config,
                                   Precision prec) {
  long which = 0;
  BigComplex a = alpha.to_precision(prec);
  if (near_nonpositive_integer(a, &which)) return BigComplex(prec);

  // Integrand (-t)^(-alpha) e^(-t) with the branch cut of (-t)^(-alpha) along
  // t > 0, exactly where the loop wraps.
  ComplexFn f = [&a, prec](const BigComplex& t) { return pow(-t, -a) * exp(-t); };

  double bits = static_cast<double>(prec) + 40.0 + config.tail_decades;
  // e^-t tail plus algebraic growth of |t^(-alpha)|.
  double re_a = a.real().to_double();
  double length_d = bits * 0.6931 + std::max(0.0, -re_a) * std::log(bits) + 8.0;
  BigFloat length(length_d, prec);
  BigFloat h(config.half_width, prec);
  // Comfortably above the arithmetic noise floor of the panel sums, far below
  // any useful target.
  BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) * 3 / 4, prec);
  // Loop oriented anticlockwise around the cut, traversed via the stadium.
  QuadratureResult q = stadium_ray_integral(f, BigComplex(prec), BigComplex(1L, 0L, prec), length,
                                            h, LoopOrientation::Anticlockwise, prec, tol);
  BigComplex two_pi_i = BigComplex::i(prec) * BigFloat::pi(prec) * 2L;
  return -q.value / two_pi_i;
}

}  // namespace resurgo
