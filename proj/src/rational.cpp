#include "resurgo/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace resurgo {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  mpq_class n = o.norm();
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex GaussianRational::value(Precision prec) const {
  BigFloat re(prec), im(prec);
  mpfr_set_q(re.raw(), re_.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(im.raw(), im_.get_mpq_t(), MPFR_RNDN);
  return BigComplex(std::move(re), std::move(im));
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out = re_.get_str();
  if (im_ != 0) {
    if (!out.empty()) out += sgn(im_) < 0 ? "-" : "+";
    else if (sgn(im_) < 0) out += "-";
    mpq_class a = abs(im_);
    if (a != 1) out += a.get_str() + "*";
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.str(); }

}  // namespace resurgo
