#pragma once

#include <iosfwd>
#include <string>

#include "resurgo/poly.hpp"

namespace resurgo {

// Rational function num/den in canonical form: gcd(num, den) = 1 and den
// monic. Canonicalization is eager so long recurrences stay tidy.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly(GaussianRational(1))) {}
  RatFunc(Poly num, Poly den);
  RatFunc(const GaussianRational& c) : RatFunc(Poly(c), Poly(GaussianRational(1))) {}  // NOLINT
  RatFunc(long c) : RatFunc(GaussianRational(c)) {}                                    // NOLINT
  explicit RatFunc(const Poly& p) : num_(p), den_(Poly(GaussianRational(1))) {}

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }

  RatFunc derivative() const;
  GaussianRational eval(const GaussianRational& x) const;
  BigComplex eval(const BigComplex& x) const;

  // Laurent expansion about x0: returns coefficients of (z-x0)^(-m) ...
  // (z-x0)^(n-1-m) where m = pole_order; m is written to *pole_order when
  // non-null. Orders are decided numerically at x0's precision.
  std::vector<BigComplex> laurent(const BigComplex& x0, size_t n, long* pole_order = nullptr) const;
  // Pole order at x0 (0 if regular there), decided numerically.
  long pole_order(const BigComplex& x0) const;

  std::string str(const std::string& var = "z") const;

  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
  RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  Poly num_, den_;
};

enum class RatOp { Add, Sub, Mul, Div };

// Dispatch wrapper used by the CLI and tests; Div requires b != 0.
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatOp op);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace resurgo
