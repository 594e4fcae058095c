#include "resurgo/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace resurgo {

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigComplex Poly::eval(const BigComplex& x) const {
  BigComplex acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->value(x.precision());
  return acc;
}

std::vector<BigComplex> Poly::taylor(const BigComplex& x0, size_t n) const {
  // Repeated synthetic division by (z - x0); remainders are the Taylor
  // coefficients in ascending order.
  Precision p = x0.precision();
  std::vector<BigComplex> work;
  work.reserve(coeffs_.size());
  for (const auto& c : coeffs_) work.push_back(c.value(p));
  std::vector<BigComplex> out(n, BigComplex(p));
  for (size_t k = 0; k < n && !work.empty(); ++k) {
    BigComplex carry(p);
    for (size_t j = work.size(); j-- > 0;) {
      carry = work[j] + carry * x0;
      work[j] = carry;
    }
    out[k] = work.front();
    work.erase(work.begin());
  }
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (GaussianRational(1) / leading());
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const GaussianRational& s) {
  if (s.is_zero()) return Poly();
  std::vector<GaussianRational> c(a.coeffs_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussianRational> rem(a.coeffs());
  std::vector<GaussianRational> quot(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= b.degree(); --k) {
    GaussianRational q = rem[k] / bc.back();
    quot[k - b.degree()] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= q * bc[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string term;
    GaussianRational c = coeffs_[k];
    bool neg = c.is_real() && sgn(c.real()) < 0;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (neg) c = -c;
    std::string cs = c.str();
    if (k == 0) {
      term = cs;
    } else {
      if (cs != "1") term = (c.is_real() ? cs : "(" + cs + ")") + "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace resurgo
