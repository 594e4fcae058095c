#include "resurgo/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace resurgo {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(GaussianRational(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  GaussianRational lead = den_.leading();
  if (lead != GaussianRational(1)) {
    GaussianRational inv = GaussianRational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::derivative() const {
  // (n/d)' = (n'd - nd')/d^2; the constructor re-canonicalizes.
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GaussianRational RatFunc::eval(const GaussianRational& x) const {
  GaussianRational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

BigComplex RatFunc::eval(const BigComplex& x) const {
  BigComplex d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

long RatFunc::pole_order(const BigComplex& x0) const {
  if (is_zero()) return 0;
  Precision p = x0.precision();
  size_t n = static_cast<size_t>(den_.degree()) + 1;
  std::vector<BigComplex> dt = den_.taylor(x0, n);
  BigFloat scale(0L, p);
  for (const auto& c : dt) scale = max(scale, abs(c));
  BigFloat tol = scale * BigFloat::pow2(-(p / 2), p);
  for (size_t k = 0; k < dt.size(); ++k)
    if (abs(dt[k]) > tol) return static_cast<long>(k);
  return static_cast<long>(dt.size());
}

std::vector<BigComplex> RatFunc::laurent(const BigComplex& x0, size_t n, long* pole_order_out) const {
  Precision p = x0.precision();
  long m = pole_order(x0);
  if (pole_order_out) *pole_order_out = m;
  if (is_zero()) return std::vector<BigComplex>(n, BigComplex(p));
  size_t need = n + static_cast<size_t>(m);
  std::vector<BigComplex> nt = num_.taylor(x0, need);
  std::vector<BigComplex> dt = den_.taylor(x0, need + static_cast<size_t>(m));
  // Shift out the vanishing part of the denominator.
  dt.erase(dt.begin(), dt.begin() + m);
  // Power-series division nt / dt.
  std::vector<BigComplex> q(need, BigComplex(p));
  for (size_t k = 0; k < need; ++k) {
    BigComplex acc = nt[k];
    for (size_t j = 1; j <= k; ++j) acc -= dt[j] * q[k - j];
    q[k] = acc / dt[0];
  }
  q.resize(n);
  return q;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatOp op) {
  switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div: return a / b;
  }
  throw std::logic_error("ratfunc_arith: bad op");
}

std::string RatFunc::str(const std::string& var) const {
  if (is_poly()) return num_.str(var);
  std::string n = num_.str(var);
  std::string d = den_.str(var);
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace resurgo
