#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "cxdist/rational.hpp"

namespace cxd {

// Complex number with rational real and imaginary parts, i.e. an element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;  // throws std::domain_error on zero

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
  // Lexicographic on (re, im); a total order for ordered containers, not a field order.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

  std::string to_string() const;
  std::size_t hash() const { return re_.hash() * 1000003u ^ im_.hash(); }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace cxd

template <>
struct std::hash<cxd::GaussianRational> {
  std::size_t operator()(const cxd::GaussianRational& z) const { return z.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<cxd::Rational> : GenericNumTraits<cxd::Rational> {
  using Real = cxd::Rational;
  using NonInteger = cxd::Rational;
  using Nested = cxd::Rational;
  using Literal = cxd::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline cxd::Rational epsilon() { return cxd::Rational(0); }
  static inline cxd::Rational dummy_precision() { return cxd::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<cxd::GaussianRational> : GenericNumTraits<cxd::GaussianRational> {
  // Registered as a non-complex scalar: the library only needs the field
  // operations, and Eigen's conjugating kernels must never touch it.
  using Real = cxd::GaussianRational;
  using NonInteger = cxd::GaussianRational;
  using Nested = cxd::GaussianRational;
  using Literal = cxd::GaussianRational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 96
  };
  static inline cxd::GaussianRational epsilon() { return {}; }
  static inline cxd::GaussianRational dummy_precision() { return {}; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
