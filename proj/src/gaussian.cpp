#include "cxdist/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace cxd {

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
  if (im_.is_zero()) return {re_.inverse()};
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out;
  if (!re_.is_zero()) out = re_.to_string() + (im_.sign() > 0 ? "+" : "");
  if (im_ == Rational(1)) return out + "i";
  if (im_ == Rational(-1)) return out + "-i";
  return out + im_.to_string() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace cxd
