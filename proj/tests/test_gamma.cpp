#include <doctest.h>

#include "resurgo/gammafn.hpp"

using namespace resurgo;

namespace {
double rel_err(const BigComplex& got, const BigComplex& want) {
  if (want.is_zero()) return abs(got).to_double();
  return (abs(got - want) / abs(want)).to_double();
}
}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("complex gamma satisfies the functional equation") {
  Precision prec = 256;
  BigComplex z(0.7, 1.3, prec);
  BigComplex lhs = gamma(z + BigComplex(1L, 0L, prec));
  BigComplex rhs = z * gamma(z);
  CHECK(rel_err(lhs, rhs) < 1e-70);

  // |Gamma(1/2)|^2 = pi, and a left-half-plane reflection sample.
  BigComplex half(0.5, 0.0, prec);
  CHECK((abs(gamma(half)) * abs(gamma(half)) - BigFloat::pi(prec)).to_double() < 1e-70);
  BigComplex zneg(-1.3, 0.4, prec);
  CHECK(rel_err(gamma(zneg + BigComplex(1L, 0L, prec)), zneg * gamma(zneg)) < 1e-65);
}

TEST_CASE("gamma_ratio_expansion exact and near-exact cases") {
  Precision prec = 256;
  // alpha = 1: exactly 1 at every order.
  for (int order : {0, 1, 4, 9}) {
    BigComplex v = gamma_ratio_expansion(17, BigComplex(1L, 0L, prec), order);
    CHECK(rel_err(v, BigComplex(1L, 0L, prec)) < 1e-70);
  }
  // alpha = 2, n = 10, one term: 10 (1 + 1/10) = 11 = Gamma(12)/Gamma(11).
  BigComplex v = gamma_ratio_expansion(10, BigComplex(2L, 0L, prec), 1);
  CHECK(rel_err(v, BigComplex(11L, 0L, prec)) < 1e-70);
  // Integer alpha reproduces exact rational ratios once enough terms are in.
  BigComplex v3 = gamma_ratio_expansion(10, BigComplex(3L, 0L, prec), 2);
  CHECK(rel_err(v3, BigComplex(11L * 12L, 0L, prec)) < 1e-70);
}

TEST_CASE("gamma_ratio_expansion two-term value vs direct gamma at alpha = 1/2") {
  Precision prec = 256;
  BigComplex alpha(0.5, 0.0, prec);
  BigComplex approx = gamma_ratio_expansion(50, alpha, 1);
  BigComplex exact = gamma(BigComplex(50.5, 0.0, prec)) / gamma(BigComplex(51L, 0L, prec));
  CHECK(rel_err(approx, exact) < 1e-3);
  // More terms, closer.
  BigComplex better = gamma_ratio_expansion(50, alpha, 6);
  CHECK(rel_err(better, exact) < 1e-9);
}

TEST_CASE("reciprocal gamma hankel: known values") {
  Precision prec = 256;
  BigComplex one = reciprocal_gamma_hankel(BigComplex(1L, 0L, prec));
  CHECK(rel_err(one, BigComplex(1L, 0L, prec)) < 1e-12);

  BigComplex half = reciprocal_gamma_hankel(BigComplex(0.5, 0.0, prec));
  BigComplex want(BigFloat(1L, prec) / sqrt(BigFloat::pi(prec)), BigFloat(0L, prec));
  CHECK(rel_err(half, want) < 1e-12);
}

TEST_CASE("reciprocal gamma hankel vs direct evaluation at a complex point") {
  Precision prec = 256;
  BigComplex alpha(3.0, 2.0, prec);
  BigComplex via_loop = reciprocal_gamma_hankel(alpha);
  BigComplex direct = reciprocal_gamma(alpha);
  CHECK(rel_err(via_loop, direct) < 1e-10);
}

TEST_CASE("reciprocal gamma at nonpositive integers is zero") {
  Precision prec = 128;
  CHECK(reciprocal_gamma(BigComplex(0L, 0L, prec)).is_zero());
  CHECK(reciprocal_gamma(BigComplex(-3L, 0L, prec)).is_zero());
  CHECK(reciprocal_gamma_hankel(BigComplex(-2L, 0L, prec)).is_zero());
}
