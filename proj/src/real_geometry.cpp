#include "cxdist/real_geometry.hpp"

#include <map>

namespace cxd {

RealPoint6 to_real(const PointC3& p) {
  RealPoint6 r;
  for (int i = 0; i < 3; ++i) {
    r(2 * i) = p(i).re();
    r(2 * i + 1) = p(i).im();
  }
  return r;
}

PointC3 from_real(const RealPoint6& p) {
  return vec3({p(0), p(1)}, {p(2), p(3)}, {p(4), p(5)});
}

RealPoint6 apply_j(const RealPoint6& v) {
  RealPoint6 out;
  for (int i = 0; i < 3; ++i) {
    out(2 * i) = -v(2 * i + 1);
    out(2 * i + 1) = v(2 * i);
  }
  return out;
}

Eigen::Matrix<Rational, 6, 6> j_matrix() {
  Eigen::Matrix<Rational, 6, 6> j = Eigen::Matrix<Rational, 6, 6>::Zero();
  for (int i = 0; i < 3; ++i) {
    j(2 * i, 2 * i + 1) = -1;
    j(2 * i + 1, 2 * i) = 1;
  }
  return j;
}

bool is_standard(const LineC3& line) { return line.pivot() == 0; }

StandardLineCoords g_coords(const LineC3& line) {
  if (!is_standard(line))
    throw NonStandardLineError("g_coords: line " + line.to_string() + " is parallel to the z2z3 plane");
  // Canonical form already is (0, a, b) + t(1, c, d).
  const auto& b = line.base();
  const auto& d = line.direction();
  return {{b(1).re(), b(1).im(), b(2).re(), b(2).im(), d(1).re(), d(1).im(), d(2).re(), d(2).im()}};
}

LineC3 g_inverse(const StandardLineCoords& c) { return LineC3::from_direction(vec3(0, c.a(), c.b()), vec3(1, c.c(), c.d())); }

RealPoint6 phi(const StandardLineCoords& coords, const Rational& s, const Rational& t) {
  const auto& [a1, a2, b1, b2, c1, c2, d1, d2] = coords.values;
  RealPoint6 out;
  out << s, t, a1 + s * c1 - t * c2, a2 + s * c2 + t * c1, b1 + s * d1 - t * d2, b2 + s * d2 + t * d1;
  return out;
}

std::array<RealPoly, 6> phi_poly() {
  constexpr std::size_t n = 10;
  auto v = [](std::size_t i) { return RealPoly::variable(n, i); };
  const RealPoly a1 = v(0), a2 = v(1), b1 = v(2), b2 = v(3), c1 = v(4), c2 = v(5), d1 = v(6), d2 = v(7);
  const RealPoly s = v(8), t = v(9);
  return {s, t, a1 + s * c1 - t * c2, a2 + s * c2 + t * c1, b1 + s * d1 - t * d2, b2 + s * d2 + t * d1};
}

std::vector<RealPoly> line_membership_conditions(const RealPoly& f) {
  if (f.variable_count() != 6) throw std::invalid_argument("line_membership_conditions: f must have 6 variables");
  const auto sub = phi_poly();
  const RealPoly composed = compose(f, std::span<const RealPoly>(sub.data(), sub.size()));

  std::map<Monomial, RealPoly, GrlexBefore> by_st;
  for (const auto& [mono, c] : composed.terms()) {
    Monomial st{mono[8], mono[9]};
    Monomial coords(mono.begin(), mono.begin() + 8);
    auto it = by_st.try_emplace(std::move(st), RealPoly(8)).first;
    it->second.add_term(std::move(coords), c);
  }
  std::vector<RealPoly> out;
  for (auto& [st, q] : by_st)
    if (!q.is_zero()) out.push_back(std::move(q));
  return out;
}

bool satisfies_conditions(std::span<const RealPoly> conditions, const StandardLineCoords& coords) {
  const std::span<const Rational> point(coords.values.data(), coords.values.size());
  for (const auto& q : conditions)
    if (!q.eval(point).is_zero()) return false;
  return true;
}

ComplexTangentFrame complex_tangent_frame(const RealPoly& f, const RealPoint6& p) {
  if (f.variable_count() != 6) throw std::invalid_argument("complex_tangent_frame: f must have 6 variables");
  ComplexTangentFrame frame;
  const auto grad = gradient(f);
  for (int i = 0; i < 6; ++i) frame.gradient(i) = grad[static_cast<std::size_t>(i)].eval(p);
  if (is_zero(frame.gradient)) throw SingularPointError("complex_tangent_frame: gradient vanishes at the point");
  frame.j_gradient = apply_j(frame.gradient);

  Eigen::Matrix<Rational, 2, 6> normals;
  normals.row(0) = frame.gradient.transpose();
  normals.row(1) = frame.j_gradient.transpose();
  for (const auto& v : nullspace(normals)) frame.tangent_basis.emplace_back(v);

  const auto& g = frame.gradient;
  const auto& jg = frame.j_gradient;
  Rational norm2;
  for (int i = 0; i < 6; ++i) norm2 += g(i) * g(i);
  for (int j = 0; j < 6; ++j) {
    RealPoint6 e;
    for (int i = 0; i < 6; ++i) e(i) = Rational(i == j ? 1 : 0) * norm2 - g(j) * g(i) - jg(j) * jg(i);
    frame.e_vectors[static_cast<std::size_t>(j)] = e;
  }
  return frame;
}

RealPoly ruling_polynomial(const RealPoly& f, const RealPoint6& p) {
  const auto frame = complex_tangent_frame(f, p);
  Eigen::Matrix<Rational, 6, 6> columns;
  for (int j = 0; j < 6; ++j) columns.col(j) = frame.e_vectors[static_cast<std::size_t>(j)];
  return affine_compose(f, columns, p);
}

bool ruled_at_point(const RealPoly& f, const RealPoint6& p) {
  if (!f.eval(p).is_zero()) throw std::invalid_argument("ruled_at_point: point is not on Z(f)");
  return ruling_polynomial(f, p).is_zero();
}

std::optional<StandardLineCoords> common_standard_line(const PointC3& p, const PointC3& q) {
  // Unknowns (a, b, c, d): a + x1 c = x2 and b + x1 d = x3 for x in {p, q}.
  Eigen::Matrix<GaussianRational, 4, 4> m = Eigen::Matrix<GaussianRational, 4, 4>::Zero();
  Eigen::Matrix<GaussianRational, 4, 1> rhs;
  const PointC3* pts[2] = {&p, &q};
  for (int k = 0; k < 2; ++k) {
    const PointC3& x = *pts[k];
    m(2 * k, 0) = 1;
    m(2 * k, 2) = x(0);
    rhs(2 * k) = x(1);
    m(2 * k + 1, 1) = 1;
    m(2 * k + 1, 3) = x(0);
    rhs(2 * k + 1) = x(2);
  }
  const auto sol = solve_particular(m, rhs);
  if (!sol) return std::nullopt;
  if (rank(m) < 4) throw std::invalid_argument("common_standard_line: points coincide");
  const auto& v = *sol;
  return StandardLineCoords{{v(0).re(), v(0).im(), v(1).re(), v(1).im(), v(2).re(), v(2).im(), v(3).re(), v(3).im()}};
}

}  // namespace cxd
