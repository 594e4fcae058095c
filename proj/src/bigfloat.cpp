#include "resurgo/bigfloat.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace resurgo {

namespace {
thread_local Precision g_default_precision = 256;

BigFloat unary(const BigFloat& a, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  BigFloat r(a.precision());
  fn(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

Precision default_precision() noexcept { return g_default_precision; }

void set_default_precision(Precision bits) noexcept {
  g_default_precision = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

std::string BigFloat::str(size_t digits) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";
  if (digits == 0) digits = static_cast<size_t>(precision() * 0.30103) + 3;
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, digits, value_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign_part;
  if (!mant.empty() && mant[0] == '-') {
    sign_part = "-";
    mant.erase(0, 1);
  }
  // Trim trailing zeros but keep at least one digit.
  size_t last = mant.find_last_not_of('0');
  if (last != std::string::npos) mant.erase(last + 1);
  if (mant.empty()) mant = "0";
  std::string out = sign_part + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

BigFloat BigFloat::parse(const std::string& text, Precision prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat::parse: bad literal '" + text + "'");
  return r;
}

BigFloat BigFloat::pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, Precision prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }
BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
BigFloat exp(const BigFloat& a) { return unary(a, mpfr_exp); }
BigFloat log(const BigFloat& a) { return unary(a, mpfr_log); }
BigFloat sin(const BigFloat& a) { return unary(a, mpfr_sin); }
BigFloat cos(const BigFloat& a) { return unary(a, mpfr_cos); }
BigFloat sinh(const BigFloat& a) { return unary(a, mpfr_sinh); }
BigFloat cosh(const BigFloat& a) { return unary(a, mpfr_cosh); }
BigFloat floor(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::min(y.precision(), x.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::min(y.precision(), x.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.precision(), b.precision()));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& a, long n) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

std::ostream& operator<<(std::ostream& os, const BigFloat& v) { return os << v.str(); }

}  // namespace resurgo
