#include "resurgo/bigcomplex.hpp"

#include <ostream>

namespace resurgo {

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  // Smith's scaled formula keeps intermediate magnitudes tame.
  if (abs(o.re_) >= abs(o.im_)) {
    BigFloat t = o.im_ / o.re_;
    BigFloat d = o.re_ + o.im_ * t;
    BigFloat r = (re_ + im_ * t) / d;
    BigFloat i = (im_ - re_ * t) / d;
    re_ = std::move(r);
    im_ = std::move(i);
  } else {
    BigFloat t = o.re_ / o.im_;
    BigFloat d = o.re_ * t + o.im_;
    BigFloat r = (re_ * t + im_) / d;
    BigFloat i = (im_ * t - re_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
  }
  return *this;
}

std::string BigComplex::str(size_t digits) const {
  if (im_.is_zero()) return re_.str(digits);
  std::string s = re_.str(digits);
  s += im_.sign() < 0 ? " - " : " + ";
  s += abs(im_).str(digits) + "i";
  return s;
}

BigFloat abs(const BigComplex& a) { return hypot(a.real(), a.imag()); }
BigFloat arg(const BigComplex& a) { return atan2(a.imag(), a.real()); }
BigComplex conj(const BigComplex& a) { return BigComplex(a.real(), -a.imag()); }

BigComplex sqrt(const BigComplex& a) {
  if (a.imag().is_zero()) {
    if (a.real().sign() >= 0) return BigComplex(sqrt(a.real()), BigFloat(0L, a.precision()));
    return BigComplex(BigFloat(0L, a.precision()), sqrt(-a.real()));
  }
  // sqrt via half-angle: u = sqrt((|a|+|re|)/2), the larger component first.
  BigFloat r = abs(a);
  BigFloat u = sqrt((r + abs(a.real())) / 2L);
  BigFloat v = abs(a.imag()) / (u * 2L);
  if (a.real().sign() >= 0) {
    return BigComplex(u, a.imag().sign() >= 0 ? v : -v);
  }
  return BigComplex(v, a.imag().sign() >= 0 ? u : -u);
}

BigComplex exp(const BigComplex& a) {
  BigFloat m = exp(a.real());
  return BigComplex(m * cos(a.imag()), m * sin(a.imag()));
}

BigComplex log(const BigComplex& a) { return BigComplex(log(abs(a)), arg(a)); }

BigComplex sinh(const BigComplex& a) {
  return BigComplex(sinh(a.real()) * cos(a.imag()), cosh(a.real()) * sin(a.imag()));
}

BigComplex cosh(const BigComplex& a) {
  return BigComplex(cosh(a.real()) * cos(a.imag()), sinh(a.real()) * sin(a.imag()));
}

BigComplex pow(const BigComplex& a, const BigComplex& b) {
  if (a.is_zero()) return BigComplex(a.precision());
  if (b.imag().is_zero() && a.imag().is_zero() && a.real().sign() > 0)
    return BigComplex(pow(a.real(), b.real()), BigFloat(0L, a.precision()));
  return exp(b * log(a));
}

BigComplex pow(const BigComplex& a, long n) {
  Precision p = a.precision();
  if (n == 0) return BigComplex(1L, 0L, p);
  BigComplex base = n < 0 ? BigComplex(1L, 0L, p) / a : a;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  BigComplex acc(1L, 0L, p);
  while (k) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

BigComplex polar(const BigFloat& r, const BigFloat& theta) {
  return BigComplex(r * cos(theta), r * sin(theta));
}

BigComplex unit(const BigFloat& theta) { return BigComplex(cos(theta), sin(theta)); }

std::ostream& operator<<(std::ostream& os, const BigComplex& v) { return os << v.str(); }

}  // namespace resurgo
