#include <doctest.h>

#include <random>

#include "resurgo/io.hpp"
#include "resurgo/quadrature.hpp"

using namespace resurgo;

namespace {

double rel_err(const BigComplex& got, const BigComplex& want) {
  if (want.is_zero()) return abs(got).to_double();
  return (abs(got - want) / abs(want)).to_double();
}

GaussianRational rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

RatFunc rand_ratfunc(std::mt19937& rng, int dn, int dd) {
  std::vector<GaussianRational> n, d;
  for (int k = 0; k <= dn; ++k) n.push_back(rand_rat(rng));
  for (int k = 0; k < dd; ++k) d.push_back(rand_rat(rng));
  d.push_back(GaussianRational(1));
  if (Poly(n).is_zero()) n[0] = GaussianRational(1);
  return RatFunc(Poly(n), Poly(d));
}

}  // namespace

TEST_CASE("gaussian rational field ops stay canonical") {
  GaussianRational a(1, 2), b(1, 3);
  CHECK((a + b) == GaussianRational(5, 6));
  CHECK((a / b) == GaussianRational(3, 2));
  GaussianRational i = GaussianRational::i();
  CHECK((i * i) == GaussianRational(-1));
  CHECK(((a + i * b) * (a + i * b).conj()) ==
        GaussianRational(mpq_class(1, 4) + mpq_class(1, 9)));
}

TEST_CASE("ratfunc arithmetic: like terms and cancellation") {
  RatFunc inv_z = RatFunc(1) / RatFunc::variable();
  CHECK(ratfunc_arith(inv_z, inv_z, RatOp::Add) == RatFunc(2) / RatFunc::variable());

  RatFunc a = parse_ratfunc("1/(1-z)");
  RatFunc b = parse_ratfunc("(1-z)/(2-z)");
  CHECK(ratfunc_arith(a, b, RatOp::Mul) == parse_ratfunc("1/(2-z)"));

  CHECK_THROWS_AS(ratfunc_arith(a, RatFunc(), RatOp::Div), std::domain_error);
}

TEST_CASE("ratfunc derivative matches a finite-difference oracle at 256 bits") {
  RatFunc f = parse_ratfunc("2(-5+3z)/((-2+z)^2 (-1+z)^4)");
  RatFunc df = f.derivative();
  Precision prec = 256;
  BigComplex z(BigFloat::parse("0.5", prec), BigFloat(1L, prec) / 3L);
  BigFloat h = BigFloat::pow2(-60, prec);
  BigComplex hh(h, BigFloat(0L, prec));
  BigComplex fd = (f.eval(z + hh) - f.eval(z - hh)) / (hh * 2L);
  // Central difference error ~ h^2 |f'''| with h = 2^-60.
  CHECK(rel_err(df.eval(z), fd) < 1e-30);
}

TEST_CASE("ratfunc derivative closed forms") {
  RatFunc inv_z = RatFunc(1) / RatFunc::variable();
  CHECK(inv_z.derivative() == parse_ratfunc("-1/z^2"));
  CHECK(parse_ratfunc("3/(4z^3)").derivative() == parse_ratfunc("-9/(4z^4)"));
  CHECK(parse_ratfunc("-3/(4z^3)").derivative() == parse_ratfunc("9/(4z^4)"));
}

TEST_CASE("symbolic/numeric consistency of exact operations") {
  std::mt19937 rng(42);
  Precision prec = 192;
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 20; ++rep) {
    RatFunc a = rand_ratfunc(rng, 3, 2);
    RatFunc b = rand_ratfunc(rng, 2, 2);
    RatFunc sum = a + b, prod = a * b;
    BigComplex z(u(rng), u(rng), prec);
    try {
      BigComplex rhs_s = a.eval(z) + b.eval(z), rhs_p = a.eval(z) * b.eval(z);
      CHECK(abs(sum.eval(z) - rhs_s).to_double() < 1e-40 * (1 + abs(rhs_s).to_double()));
      CHECK(abs(prod.eval(z) - rhs_p).to_double() < 1e-40 * (1 + abs(rhs_p).to_double()));
    } catch (const std::domain_error&) {
      // random sample hit a pole; fine
    }
  }
}

TEST_CASE("poly_roots finds exact small cases") {
  Precision prec = 256;
  Poly p({GaussianRational(1), GaussianRational(0), GaussianRational(1)});  // z^2 + 1
  auto roots = poly_roots(p, prec);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(r.multiplicity == 1);
    CHECK(std::abs(std::abs(r.root.imag().to_double()) - 1.0) < 1e-37);
    CHECK(std::abs(r.root.real().to_double()) < 1e-37);
  }
}

TEST_CASE("poly_roots resolves multiplicities by clustering") {
  Precision prec = 256;
  Poly zm1({GaussianRational(-1), GaussianRational(1)});
  Poly zm2({GaussianRational(-2), GaussianRational(1)});
  Poly p = zm1 * zm1 * zm1 * zm1 * zm2 * zm2;
  auto roots = poly_roots(p, prec);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 4);
  CHECK(abs(roots[0].root - BigComplex(1L, 0L, prec)).to_double() < 1e-15);
  CHECK(roots[1].multiplicity == 2);
  CHECK(abs(roots[1].root - BigComplex(2L, 0L, prec)).to_double() < 1e-15);
}

TEST_CASE("poly_roots reconstruction oracle on a random degree-12 polynomial") {
  std::mt19937 rng(7);
  Precision prec = 256;
  std::vector<GaussianRational> c;
  for (int k = 0; k < 12; ++k) c.push_back(rand_rat(rng));
  c.push_back(GaussianRational(1));
  Poly p(c);
  auto roots = poly_roots(p, prec);
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  REQUIRE(total == 12);
  Jet prod{BigComplex(1L, 0L, prec)};
  for (const auto& r : roots)
    for (int m = 0; m < r.multiplicity; ++m) {
      Jet lin{-r.root, BigComplex(1L, 0L, prec)};
      prod = jet_mul(prod, lin, prod.size() + 1);
    }
  BigFloat worst(0L, prec);
  for (size_t k = 0; k < prod.size(); ++k) {
    BigComplex want = p.coeff(k).value(prec);
    worst = max(worst, abs(prod[k] - want));
  }
  CHECK(worst < BigFloat::pow2(-(256 / 2), prec));
}

TEST_CASE("poly_roots rejects degenerate input") {
  CHECK_THROWS_AS(poly_roots(Poly(), 128), std::invalid_argument);
}

TEST_CASE("star product basics: 1 * 1 = w") {
  Precision prec = 128;
  auto c = [&](long v) { return BigComplex(v, 0L, prec); };
  TruncatedSeries one(BigComplex(prec), Jet{c(1), c(0), c(0), c(0)});
  auto w = star_convolve(one, one);
  CHECK(abs(w.coeffs[0]).to_double() == 0.0);
  CHECK(rel_err(w.coeffs[1], c(1)) < 1e-30);
  CHECK(abs(w.coeffs[2]).to_double() < 1e-30);
}

TEST_CASE("star product matches the convolution integral (quadrature oracle)") {
  Precision prec = 256;
  // f = g = 1/(1-w) truncated at order 10, evaluated at w = 0.3, against
  // direct quadrature of int_0^w ds/((1-s)(1-w+s)).
  size_t order = 10;
  Jet geo(order + 1, BigComplex(1L, 0L, prec));
  TruncatedSeries f(BigComplex(prec), geo);
  auto conv = star_convolve(f, f);

  BigComplex w(BigFloat::parse("0.3", prec), BigFloat(0L, prec));
  ComplexFn integrand = [&](const BigComplex& s) {
    BigComplex one(1L, 0L, prec);
    return one / ((one - s) * (one - w + s));
  };
  auto q = tanh_sinh(integrand, BigComplex(prec), w, prec, BigFloat::pow2(-200, prec));
  BigComplex series_val = jet_eval(conv.coeffs, w);
  double tail = std::pow(0.3, 11) * 12;  // truncation beyond order 10
  CHECK(abs(series_val - q.value).to_double() < tail);

  // First few exact coefficients of the log-type convolution.
  CHECK(rel_err(conv.coeffs[1], BigComplex(1L, 0L, prec)) < 1e-60);
  CHECK(rel_err(conv.coeffs[2], BigComplex(1L, 0L, prec)) < 1e-60);
  CHECK(rel_err(conv.coeffs[3], BigComplex(BigFloat(5L, prec) / 6L, BigFloat(0L, prec))) < 1e-60);
}

TEST_CASE("star product is commutative and associative on random germs") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Precision prec = 192;
  for (int rep = 0; rep < 20; ++rep) {
    Jet a, b, c;
    for (int k = 0; k < 8; ++k) {
      a.push_back(BigComplex(u(rng), u(rng), prec));
      b.push_back(BigComplex(u(rng), u(rng), prec));
      c.push_back(BigComplex(u(rng), u(rng), prec));
    }
    TruncatedSeries fa(BigComplex(prec), a), fb(BigComplex(prec), b), fc(BigComplex(prec), c);
    auto ab = star_convolve(fa, fb);
    auto ba = star_convolve(fb, fa);
    for (size_t k = 0; k < ab.coeffs.size(); ++k)
      CHECK(abs(ab.coeffs[k] - ba.coeffs[k]).to_double() < 1e-45);
    auto ab_c = star_convolve(ab, fc);
    auto a_bc = star_convolve(fa, star_convolve(fb, fc));
    for (size_t k = 0; k < ab_c.coeffs.size(); ++k)
      CHECK(abs(ab_c.coeffs[k] - a_bc.coeffs[k]).to_double() < 1e-45);
  }
}

TEST_CASE("star product rejects mismatched base points") {
  Precision prec = 64;
  TruncatedSeries a(BigComplex(0L, 0L, prec), Jet{BigComplex(1L, 0L, prec)});
  TruncatedSeries b(BigComplex(1L, 0L, prec), Jet{BigComplex(1L, 0L, prec)});
  CHECK_THROWS_AS(star_convolve(a, b), std::invalid_argument);
}

TEST_CASE("richardson extrapolation nails polynomial-in-1/n limits") {
  Precision prec = 128;
  std::vector<BigComplex> seq;
  for (long n = 10; n < 18; ++n) {
    BigFloat nn(n, prec);
    seq.push_back(BigComplex(BigFloat(3L, prec) + BigFloat(2L, prec) / nn + BigFloat(5L, prec) / (nn * nn),
                             BigFloat(0L, prec)));
  }
  BigComplex lim = richardson_tail(seq, 10, 4);
  CHECK(rel_err(lim, BigComplex(3L, 0L, prec)) < 1e-25);
}

TEST_CASE("min-precision propagation in mixed arithmetic") {
  BigFloat a(1.5, 256), b(2.5, 128);
  CHECK((a * b).precision() == 128);
  CHECK((a + b).precision() == 128);
  BigComplex x(1.0, 2.0, 300), y(0.5, 0.25, 200);
  CHECK((x * y).precision() == 200);
}
