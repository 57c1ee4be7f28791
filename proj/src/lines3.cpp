#include "cxdist/lines3.hpp"

#include <stdexcept>

namespace cxd {
namespace {

int first_nonzero(const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (!v(i).is_zero()) return i;
  return -1;
}

std::string vec_string(const Vec3& v) {
  return "(" + v(0).to_string() + ", " + v(1).to_string() + ", " + v(2).to_string() + ")";
}

}  // namespace

LineC3 LineC3::from_direction(const PointC3& point, const Vec3& direction) {
  const int k = first_nonzero(direction);
  if (k < 0) throw std::invalid_argument("LineC3: zero direction");
  LineC3 l;
  l.pivot_ = k;
  const GaussianRational inv = direction(k).inverse();
  for (int i = 0; i < 3; ++i) l.dir_(i) = direction(i) * inv;
  const GaussianRational t = point(k);
  for (int i = 0; i < 3; ++i) l.base_(i) = point(i) - t * l.dir_(i);
  return l;
}

LineC3 LineC3::through(const PointC3& p, const PointC3& q) {
  if (p == q) throw std::invalid_argument("LineC3: coincident points " + vec_string(p));
  return from_direction(p, q - p);
}

PointC3 LineC3::at(const GaussianRational& t) const {
  return vec3(base_(0) + t * dir_(0), base_(1) + t * dir_(1), base_(2) + t * dir_(2));
}

bool LineC3::contains(const PointC3& p) const {
  const GaussianRational& t = p(pivot_);
  for (int i = 0; i < 3; ++i)
    if (!(p(i) - base_(i) - t * dir_(i)).is_zero()) return false;
  return true;
}

std::string LineC3::to_string() const { return vec_string(base_) + " + t" + vec_string(dir_); }

PlaneC3 PlaneC3::from_equation(const Vec3& normal, const GaussianRational& offset) {
  const int k = first_nonzero(normal);
  if (k < 0) throw std::invalid_argument("PlaneC3: zero normal");
  PlaneC3 p;
  const GaussianRational inv = normal(k).inverse();
  for (int i = 0; i < 3; ++i) p.normal_(i) = normal(i) * inv;
  p.offset_ = offset * inv;
  return p;
}

PlaneC3 PlaneC3::through_point(const Vec3& normal, const PointC3& point) {
  return from_equation(normal, dot(normal, point));
}

std::string PlaneC3::to_string() const { return vec_string(normal_) + " . x = " + offset_.to_string(); }

std::optional<BadPlane> is_bad_plane(const PlaneC3& plane) {
  const Vec3& n = plane.normal();
  if (!n(2).is_zero() || n(0).is_zero() || n(1).is_zero()) return std::nullopt;
  // Canonical form has n(0) = 1; bring it to the shape -s x + y = key.
  const GaussianRational minus_s = n(0) / n(1);
  const GaussianRational key = plane.offset() / n(1);
  const GaussianRational i = GaussianRational::i();
  if (minus_s == -i) return BadPlane{IsotropicSign::Plus, -key, key};
  if (minus_s == i) return BadPlane{IsotropicSign::Minus, -key, key};
  return std::nullopt;
}

PlaneC3 bad_plane(IsotropicSign sign, const GaussianRational& key) {
  return PlaneC3::from_equation(vec3(-slope_of(sign), 1, 0), key);
}

QuadricC3 QuadricC3::from_coefficients(const Coefficients& c) {
  std::size_t k = 0;
  while (k < c.size() && c[k].is_zero()) ++k;
  if (k == c.size()) throw std::invalid_argument("QuadricC3: all coefficients are zero");
  QuadricC3 q;
  const GaussianRational inv = c[k].inverse();
  for (std::size_t i = 0; i < c.size(); ++i) q.coeffs_[i] = c[i] * inv;
  return q;
}

QuadricC3 QuadricC3::from_poly(const MultiPoly<GaussianRational>& f) {
  if (f.variable_count() != 3) throw std::invalid_argument("QuadricC3: polynomial must have 3 variables");
  if (f.degree() > 2) throw std::invalid_argument("QuadricC3: polynomial degree exceeds 2");
  Coefficients c;
  for (std::size_t i = 0; i < kMonomials.size(); ++i)
    c[i] = f.coefficient(Monomial(kMonomials[i].begin(), kMonomials[i].end()));
  return from_coefficients(c);
}

GaussianRational QuadricC3::eval(const PointC3& p) const {
  GaussianRational acc;
  for (std::size_t i = 0; i < kMonomials.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    GaussianRational t = coeffs_[i];
    for (int v = 0; v < 3; ++v)
      for (unsigned e = 0; e < kMonomials[i][static_cast<std::size_t>(v)]; ++e) t = t * p(v);
    acc = acc + t;
  }
  return acc;
}

MultiPoly<GaussianRational> QuadricC3::to_poly() const {
  MultiPoly<GaussianRational> f(3);
  for (std::size_t i = 0; i < kMonomials.size(); ++i)
    f.add_term(Monomial(kMonomials[i].begin(), kMonomials[i].end()), coeffs_[i]);
  return f;
}

std::string QuadricC3::to_string() const { return to_poly().to_string(); }

const char* to_string(LineRelation r) {
  switch (r) {
    case LineRelation::Equal:
      return "equal";
    case LineRelation::Intersecting:
      return "intersecting";
    case LineRelation::Parallel:
      return "parallel";
    case LineRelation::Skew:
      return "skew";
  }
  return "?";
}

LinePair line_pair_relation(const LineC3& a, const LineC3& b) {
  LinePair out;
  const Vec3 w = b.base() - a.base();
  if (a.direction() == b.direction()) {
    if (a.base() == b.base()) {
      out.kind = LineRelation::Equal;
      return out;
    }
    out.kind = LineRelation::Parallel;
    out.plane = PlaneC3::through_point(cross(a.direction(), w), a.base());
    return out;
  }
  if (!det3(a.direction(), b.direction(), w).is_zero()) {
    out.kind = LineRelation::Skew;
    return out;
  }
  out.kind = LineRelation::Intersecting;
  out.plane = PlaneC3::through_point(cross(a.direction(), b.direction()), a.base());
  // base_a + t d_a = base_b + s d_b
  Eigen::Matrix<GaussianRational, 3, 2> m;
  m.col(0) = a.direction();
  m.col(1) = -b.direction();
  const auto ts = solve_particular(m, w);
  if (!ts) throw std::logic_error("line_pair_relation: coplanar non-parallel lines failed to meet");
  out.point = a.at((*ts)(0));
  return out;
}

bool lines_coplanar(const LineC3& a, const LineC3& b) {
  if (a.direction() == b.direction()) return true;
  return det3(a.direction(), b.direction(), b.base() - a.base()).is_zero();
}

Eigen::Matrix<GaussianRational, 3, 10> quadric_restriction(const LineC3& line) {
  const Vec3& b = line.base();
  const Vec3& d = line.direction();
  Eigen::Matrix<GaussianRational, 3, 10> r;
  std::size_t col = 0;
  for (int u = 0; u < 3; ++u)
    for (int v = u; v < 3; ++v, ++col) {
      const auto c = static_cast<Eigen::Index>(col);
      r(0, c) = b(u) * b(v);
      r(1, c) = b(u) * d(v) + d(u) * b(v);
      r(2, c) = d(u) * d(v);
    }
  for (int u = 0; u < 3; ++u, ++col) {
    const auto c = static_cast<Eigen::Index>(col);
    r(0, c) = b(u);
    r(1, c) = d(u);
    r(2, c) = 0;
  }
  r(0, 9) = 1;
  r(1, 9) = 0;
  r(2, 9) = 0;
  return r;
}

bool line_in_quadric(const LineC3& line, const QuadricC3& q) {
  const auto r = quadric_restriction(line);
  const auto& c = q.coefficients();
  for (Eigen::Index k = 0; k < 3; ++k) {
    GaussianRational acc;
    for (Eigen::Index j = 0; j < 10; ++j)
      if (!c[static_cast<std::size_t>(j)].is_zero() && !r(k, j).is_zero())
        acc = acc + r(k, j) * c[static_cast<std::size_t>(j)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<QuadricC3> fit_quadrics(std::span<const LineC3> lines) {
  if (lines.size() > 3) throw std::invalid_argument("fit_quadrics: at most 3 lines, got " + std::to_string(lines.size()));
  Matrix system(static_cast<Eigen::Index>(3 * lines.size()), 10);
  for (std::size_t i = 0; i < lines.size(); ++i)
    system.middleRows(static_cast<Eigen::Index>(3 * i), 3) = quadric_restriction(lines[i]);
  std::vector<QuadricC3> out;
  for (const auto& v : nullspace(system)) out.push_back(QuadricC3::from_vector(v));
  return out;
}

}  // namespace cxd
