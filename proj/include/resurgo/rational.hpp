#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "resurgo/bigcomplex.hpp"

namespace resurgo {

// Exact complex rational a + bi with a, b in Q. mpq_class keeps denominators
// positive and in lowest terms, so arithmetic stays canonical for free.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit GaussianRational(const mpq_class& re) : re_(re), im_(0) {}

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |q|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  BigComplex value(Precision prec = default_precision()) const;
  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

}  // namespace resurgo
