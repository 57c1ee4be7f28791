#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cxdist/lines3.hpp"
#include "cxdist/multipoly.hpp"

namespace cxd {

// C^3 is identified with R^6 by (z1, z2, z3) -> (Re z1, Im z1, Re z2, Im z2, Re z3, Im z3).
using RealPoint6 = Eigen::Matrix<Rational, 6, 1>;
using RealPoly = MultiPoly<Rational>;

RealPoint6 to_real(const PointC3& p);
PointC3 from_real(const RealPoint6& p);

// Multiplication by i in real coordinates: (x1, y1, ...) -> (-y1, x1, ...).
RealPoint6 apply_j(const RealPoint6& v);
Eigen::Matrix<Rational, 6, 6> j_matrix();

class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonStandardLineError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Real and imaginary parts of a, b, c, d in the normal form (0, a, b) + t(1, c, d).
struct StandardLineCoords {
  std::array<Rational, 8> values;  // a1 a2 b1 b2 c1 c2 d1 d2

  GaussianRational a() const { return {values[0], values[1]}; }
  GaussianRational b() const { return {values[2], values[3]}; }
  GaussianRational c() const { return {values[4], values[5]}; }
  GaussianRational d() const { return {values[6], values[7]}; }

  friend bool operator==(const StandardLineCoords&, const StandardLineCoords&) = default;
};

// A line is standard when its direction has a nonzero first coordinate.
bool is_standard(const LineC3& line);

// Throws NonStandardLineError for lines parallel to the z2z3 plane.
StandardLineCoords g_coords(const LineC3& line);
LineC3 g_inverse(const StandardLineCoords& coords);

// Real image of (0, a, b) + (s + it)(1, c, d):
// (s, t, a1 + s c1 - t c2, a2 + s c2 + t c1, b1 + s d1 - t d2, b2 + s d2 + t d1).
RealPoint6 phi(const StandardLineCoords& coords, const Rational& s, const Rational& t);

// phi as six polynomials in (a1, a2, b1, b2, c1, c2, d1, d2, s, t).
std::array<RealPoly, 6> phi_poly();

// Coefficients of f(phi(coords, s, t)) as polynomials in (s, t), each a
// polynomial in the 8 line coordinates. A standard line lies in Z(f) exactly
// when all of them vanish at its coordinates. Zero coefficients are omitted.
std::vector<RealPoly> line_membership_conditions(const RealPoly& f);

bool satisfies_conditions(std::span<const RealPoly> conditions, const StandardLineCoords& coords);

struct ComplexTangentFrame {
  RealPoint6 gradient;
  RealPoint6 j_gradient;
  std::vector<RealPoint6> tangent_basis;  // basis of V_p, 4 vectors
  std::array<RealPoint6, 6> e_vectors;    // E_j = e_j |g|^2 - (e_j.g) g - (e_j.Jg) Jg
};

// Throws SingularPointError when grad f(p) = 0.
ComplexTangentFrame complex_tangent_frame(const RealPoly& f, const RealPoint6& p);

// W_p(v) = f(p + sum_j v_j E_j(p)), a polynomial in v1..v6.
RealPoly ruling_polynomial(const RealPoly& f, const RealPoint6& p);

// True iff the complex plane through p along V_p lies in Z(f).
// Throws std::invalid_argument if f(p) != 0 and SingularPointError if p is singular.
bool ruled_at_point(const RealPoly& f, const RealPoint6& p);

// Standard lines through both p and q, found by solving the linear system
// for (a, b, c, d) directly. Nullopt when there is none.
std::optional<StandardLineCoords> common_standard_line(const PointC3& p, const PointC3& q);

}  // namespace cxd
