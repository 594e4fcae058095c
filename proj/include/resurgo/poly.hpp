#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "resurgo/rational.hpp"

namespace resurgo {

// Dense univariate polynomial over GaussianRational, coefficients in
// ascending degree. The zero polynomial is the empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(GaussianRational c0) { coeffs_.push_back(std::move(c0)); trim(); }
  explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly({GaussianRational(0), GaussianRational(1)}); }
  static Poly monomial(const GaussianRational& c, size_t deg) {
    std::vector<GaussianRational> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  const GaussianRational& operator[](size_t k) const { return coeffs_[k]; }
  GaussianRational coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussianRational(0);
  }
  const GaussianRational& leading() const { return coeffs_.back(); }

  GaussianRational eval(const GaussianRational& x) const;
  BigComplex eval(const BigComplex& x) const;
  // Taylor coefficients about x0, lowest order first, n terms.
  std::vector<BigComplex> taylor(const BigComplex& x0, size_t n) const;

  Poly derivative() const;
  Poly monic() const;
  std::string str(const std::string& var = "z") const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const GaussianRational& s);
  friend Poly operator*(const GaussianRational& s, const Poly& a) { return a * s; }
  friend Poly operator-(const Poly& a) { return a * GaussianRational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<GaussianRational> coeffs_;
};

// Quotient and remainder with deg(r) < deg(b); b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd by the Euclidean algorithm.
Poly gcd(Poly a, Poly b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace resurgo
