#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace resurgo {

using Precision = mpfr_prec_t;

// Thread-local working precision in bits. Values created without an explicit
// precision pick this up; binary operations round to the minimum operand
// precision.
Precision default_precision() noexcept;
void set_default_precision(Precision bits) noexcept;

class PrecisionGuard {
 public:
  explicit PrecisionGuard(Precision bits) : saved_(default_precision()) {
    set_default_precision(bits);
  }
  ~PrecisionGuard() { set_default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  Precision saved_;
};

class BigFloat {
 public:
  // A bare integer argument is a precision; numeric values always carry an
  // explicit precision.
  BigFloat() : BigFloat(default_precision()) {}
  explicit BigFloat(Precision prec) { mpfr_init2(value_, clamp(prec)); mpfr_set_zero(value_, 1); }
  BigFloat(long v, Precision prec) { mpfr_init2(value_, clamp(prec)); mpfr_set_si(value_, v, MPFR_RNDN); }
  BigFloat(int v, Precision prec) : BigFloat(static_cast<long>(v), prec) {}
  BigFloat(double v, Precision prec) { mpfr_init2(value_, clamp(prec)); mpfr_set_d(value_, v, MPFR_RNDN); }

  BigFloat(const BigFloat& o) { mpfr_init2(value_, mpfr_get_prec(o.value_)); mpfr_set(value_, o.value_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(value_, 2); mpfr_swap(value_, o.value_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(value_, mpfr_get_prec(o.value_)); mpfr_set(value_, o.value_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(value_, o.value_); return *this; }
  ~BigFloat() { mpfr_clear(value_); }

  Precision precision() const { return mpfr_get_prec(value_); }
  BigFloat to_precision(Precision prec) const {
    BigFloat r(prec);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  // Scientific-notation decimal string with enough digits for the precision.
  std::string str(size_t digits = 0) const;

  static BigFloat parse(const std::string& text, Precision prec = default_precision());
  static BigFloat pi(Precision prec = default_precision());
  // 2^e at the given precision (exact).
  static BigFloat pow2(long e, Precision prec = default_precision());

  BigFloat& operator+=(const BigFloat& o) { return binop(o, mpfr_add); }
  BigFloat& operator-=(const BigFloat& o) { return binop(o, mpfr_sub); }
  BigFloat& operator*=(const BigFloat& o) { return binop(o, mpfr_mul); }
  BigFloat& operator/=(const BigFloat& o) { return binop(o, mpfr_div); }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { a += b; return a; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { a -= b; return a; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { a *= b; return a; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { a /= b; return a; }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, long b) { return a + (-b); }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_) == 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_) >= 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

 private:
  static Precision clamp(Precision p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
  using TernaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  BigFloat& binop(const BigFloat& o, TernaryFn fn) {
    Precision p = std::min(precision(), o.precision());
    if (p != precision()) {
      BigFloat tmp(p);
      fn(tmp.value_, value_, o.value_, MPFR_RNDN);
      mpfr_swap(value_, tmp.value_);
    } else {
      fn(value_, value_, o.value_, MPFR_RNDN);
    }
    return *this;
  }
  mpfr_t value_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat sinh(const BigFloat& a);
BigFloat cosh(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& a, const BigFloat& b);
BigFloat pow(const BigFloat& a, long n);
BigFloat floor(const BigFloat& a);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

std::ostream& operator<<(std::ostream& os, const BigFloat& v);

}  // namespace resurgo
