#pragma once

#include <iosfwd>
#include <string>

#include "resurgo/bigfloat.hpp"

namespace resurgo {

// Complex number over two BigFloats of equal precision. Mixed-precision
// operands round to the minimum precision, matching BigFloat.
class BigComplex {
 public:
  // A bare integer argument is a precision, as for BigFloat.
  BigComplex() : re_(), im_() {}
  explicit BigComplex(Precision prec) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) { align(); }
  explicit BigComplex(BigFloat re) : re_(std::move(re)), im_(BigFloat(0L, re_.precision())) {}
  BigComplex(double re, double im, Precision prec = default_precision())
      : re_(re, prec), im_(im, prec) {}
  BigComplex(long re, long im, Precision prec = default_precision())
      : re_(re, prec), im_(im, prec) {}

  static BigComplex i(Precision prec = default_precision()) { return BigComplex(0L, 1L, prec); }

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  Precision precision() const { return re_.precision(); }
  BigComplex to_precision(Precision p) const { return BigComplex(re_.to_precision(p), im_.to_precision(p)); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  std::string str(size_t digits = 0) const;

  BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat r = re_ * o.re_ - im_ * o.im_;
    BigFloat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(long s) { re_ = re_ * s; im_ = im_ * s; return *this; }
  BigComplex& operator*=(const BigFloat& s) { re_ *= s; im_ *= s; return *this; }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { a += b; return a; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { a -= b; return a; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { a *= b; return a; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { a /= b; return a; }
  friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re_, -a.im_); }

  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return BigComplex(a.re_ * s, a.im_ * s); }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& s) { return BigComplex(a.re_ / s, a.im_ / s); }
  friend BigComplex operator*(const BigComplex& a, long s) { return BigComplex(a.re_ * s, a.im_ * s); }
  friend BigComplex operator*(long s, const BigComplex& a) { return a * s; }
  friend BigComplex operator/(const BigComplex& a, long s) { return BigComplex(a.re_ / s, a.im_ / s); }

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

 private:
  void align() {
    Precision p = std::min(re_.precision(), im_.precision());
    if (re_.precision() != p) re_ = re_.to_precision(p);
    if (im_.precision() != p) im_ = im_.to_precision(p);
  }
  BigFloat re_, im_;
};

BigFloat abs(const BigComplex& a);
BigFloat arg(const BigComplex& a);
BigComplex conj(const BigComplex& a);
BigComplex sqrt(const BigComplex& a);
BigComplex exp(const BigComplex& a);
BigComplex log(const BigComplex& a);
BigComplex sinh(const BigComplex& a);
BigComplex cosh(const BigComplex& a);
BigComplex pow(const BigComplex& a, const BigComplex& b);
BigComplex pow(const BigComplex& a, long n);
BigComplex polar(const BigFloat& r, const BigFloat& theta);
// exp(i*theta) at theta's precision.
BigComplex unit(const BigFloat& theta);

std::ostream& operator<<(std::ostream& os, const BigComplex& v);

}  // namespace resurgo
