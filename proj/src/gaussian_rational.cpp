#include "ksbound/gaussian_rational.hpp"

#include <stdexcept>

namespace ksb {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const mpq_class den = o.norm_sq();
  if (sgn(den) == 0) throw std::domain_error("division by zero in Q(i)");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / den;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_fraction(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string short_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (is_real()) return short_rational(re_);
  std::string s = "(" + short_rational(re_);
  if (sgn(im_) < 0)
    s += "-" + short_rational(-im_);
  else
    s += "+" + short_rational(im_);
  return s + "i)";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace ksb
