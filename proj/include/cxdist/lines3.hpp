#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cxdist/complex_plane.hpp"
#include "cxdist/linalg.hpp"
#include "cxdist/multipoly.hpp"

namespace cxd {

using PointC3 = Vec3;

// Complex line in C^3 in canonical parametric form: the direction's first
// nonzero coordinate (the pivot) is 1 and the base point has a zero in that
// coordinate. Two lines are equal as point sets iff they are equal here.
class LineC3 {
 public:
  static LineC3 through(const PointC3& p, const PointC3& q);
  static LineC3 from_direction(const PointC3& point, const Vec3& direction);

  const PointC3& base() const { return base_; }
  const Vec3& direction() const { return dir_; }
  int pivot() const { return pivot_; }

  PointC3 at(const GaussianRational& t) const;
  bool contains(const PointC3& p) const;

  friend bool operator==(const LineC3& a, const LineC3& b) { return a.base_ == b.base_ && a.dir_ == b.dir_; }
  friend bool operator<(const LineC3& a, const LineC3& b) {
    if (lex_less(a.base_, b.base_)) return true;
    if (lex_less(b.base_, a.base_)) return false;
    return lex_less(a.dir_, b.dir_);
  }

  std::string to_string() const;

 private:
  LineC3() = default;
  PointC3 base_;
  Vec3 dir_;
  int pivot_ = 0;
};

// Plane {n . x = offset}, scaled so the first nonzero entry of n is 1.
class PlaneC3 {
 public:
  static PlaneC3 from_equation(const Vec3& normal, const GaussianRational& offset);
  static PlaneC3 through_point(const Vec3& normal, const PointC3& point);

  const Vec3& normal() const { return normal_; }
  const GaussianRational& offset() const { return offset_; }

  GaussianRational eval(const PointC3& p) const { return dot(normal_, p) - offset_; }
  bool contains(const PointC3& p) const { return eval(p).is_zero(); }
  bool contains(const LineC3& l) const { return contains(l.base()) && dot(normal_, l.direction()).is_zero(); }

  friend bool operator==(const PlaneC3& a, const PlaneC3& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }
  friend bool operator<(const PlaneC3& a, const PlaneC3& b) {
    if (lex_less(a.normal_, b.normal_)) return true;
    if (lex_less(b.normal_, a.normal_)) return false;
    return a.offset_ < b.offset_;
  }

  std::string to_string() const;

 private:
  PlaneC3() = default;
  Vec3 normal_;
  GaussianRational offset_;
};

// A bad plane is Z(y - s x + k) with s = +i (sign Plus) or s = -i (sign Minus).
// It is the plane over the isotropic line y = s x + key, so key = -k.
struct BadPlane {
  IsotropicSign sign;
  GaussianRational k;
  GaussianRational key;
};

std::optional<BadPlane> is_bad_plane(const PlaneC3& plane);

// The plane {y = s x + key} sitting over an isotropic line.
PlaneC3 bad_plane(IsotropicSign sign, const GaussianRational& key);

// Quadric surface by its 10 coefficients over the monomials
// x^2, xy, xz, y^2, yz, z^2, x, y, z, 1 (graded lexicographic, highest first),
// scaled so the first nonzero coefficient is 1.
class QuadricC3 {
 public:
  using Coefficients = std::array<GaussianRational, 10>;
  static constexpr std::array<std::array<unsigned, 3>, 10> kMonomials{{{2, 0, 0},
                                                                       {1, 1, 0},
                                                                       {1, 0, 1},
                                                                       {0, 2, 0},
                                                                       {0, 1, 1},
                                                                       {0, 0, 2},
                                                                       {1, 0, 0},
                                                                       {0, 1, 0},
                                                                       {0, 0, 1},
                                                                       {0, 0, 0}}};

  static QuadricC3 from_coefficients(const Coefficients& c);
  template <typename Derived>
  static QuadricC3 from_vector(const Eigen::MatrixBase<Derived>& v) {
    Coefficients c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = v(static_cast<Eigen::Index>(i));
    return from_coefficients(c);
  }
  static QuadricC3 from_poly(const MultiPoly<GaussianRational>& f);

  const Coefficients& coefficients() const { return coeffs_; }
  GaussianRational eval(const PointC3& p) const;
  MultiPoly<GaussianRational> to_poly() const;

  friend bool operator==(const QuadricC3& a, const QuadricC3& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const QuadricC3& a, const QuadricC3& b) { return a.coeffs_ < b.coeffs_; }

  std::string to_string() const;

 private:
  QuadricC3() = default;
  Coefficients coeffs_;
};

enum class LineRelation { Equal, Intersecting, Parallel, Skew };

const char* to_string(LineRelation r);

struct LinePair {
  LineRelation kind = LineRelation::Skew;
  std::optional<PointC3> point;  // Intersecting only
  std::optional<PlaneC3> plane;  // Intersecting and Parallel

  bool coplanar() const { return kind != LineRelation::Skew; }
};

LinePair line_pair_relation(const LineC3& a, const LineC3& b);

// Same decision as line_pair_relation(a, b).coplanar() without building the plane.
bool lines_coplanar(const LineC3& a, const LineC3& b);

// Row k holds the coefficient of t^k in q(base + t*dir) as a linear form in
// the 10 quadric coefficients.
Eigen::Matrix<GaussianRational, 3, 10> quadric_restriction(const LineC3& line);

bool line_in_quadric(const LineC3& line, const QuadricC3& q);

// Basis of the quadric coefficient space vanishing on every input line
// (at most 3 lines). Elements are canonically scaled.
std::vector<QuadricC3> fit_quadrics(std::span<const LineC3> lines);

}  // namespace cxd
