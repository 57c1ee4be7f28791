#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cxdist/complex_plane.hpp"
#include "cxdist/lines3.hpp"
#include "cxdist/multipoly.hpp"

namespace cxd {

// The line l_{a,c} = {2x = (ax+cx) + (ay-cy) z, 2y = (ay+cy) + (cx-ax) z}.
LineC3 esgk_line(const PointC2& a, const PointC2& c);

// L(P): one line per ordered pair, stored row-major in (a, c).
struct EsgkFamily {
  std::vector<PointC2> points;
  std::vector<LineC3> lines;                                  // lines[a * n + c]
  std::vector<std::pair<std::size_t, std::size_t>> source;    // line index -> (a, c)
  std::map<LineC3, std::size_t> inverse;                      // line -> index

  std::size_t point_count() const { return points.size(); }
  std::size_t index(std::size_t a, std::size_t c) const { return a * points.size() + c; }
};

// Throws std::invalid_argument on duplicate points.
EsgkFamily esgk_family(std::span<const PointC2> points);

// Ordered pairs of distinct parallel lines, via the histogram of a - c.
std::uint64_t parallel_pair_count(const EsgkFamily& family);

// Same count by testing every ordered pair of lines.
std::uint64_t parallel_pair_count_bruteforce(const EsgkFamily& family);

// Common point of every l_{a,c} with c on the isotropic line y = s x + key:
// ((ax - s ay + s key)/2, (ay + s ax + key)/2, -s).
PointC3 special_point(const PointC2& a, IsotropicSign sign, const GaussianRational& key);

// Quadric through every l_{a,c} with c on y = s x + key, obtained by
// eliminating cx from the two line equations:
//   (s + z)(2x - ax - ay z + key z) - (1 - s z)(2y - ay - key + ax z).
// For s = i this is the displayed f_a; it always factors through (z + s).
QuadricC3 pencil_quadric(const PointC2& a, IsotropicSign sign, const GaussianRational& key);

// Direction of the unique l_{a,c} through p, with the (1 + z^2) denominator cleared:
//   (ay - py + pz(px - ax), px - ax + pz(py - ay), 1 + pz^2).
// Throws std::domain_error when pz = +-i.
Vec3 direction_field(const PointC2& a, const PointC3& p);

// The same field as three polynomials in (x, y, z).
std::array<MultiPoly<GaussianRational>, 3> direction_field_poly(const PointC2& a);

// c with p on l_{a,c}; throws std::domain_error when pz = +-i.
PointC2 solve_partner(const PointC2& a, const PointC3& p);

// g_a = V_a . grad f.
MultiPoly<GaussianRational> tangency_poly(const PointC2& a, const QuadricC3& f);

struct EsgkSummary {
  std::size_t n = 0;
  std::size_t line_count = 0;
  std::uint64_t parallel_pairs = 0;
  std::uint64_t bad_plane_pairs = 0;          // ordered pairs spanning a bad plane
  std::uint64_t coplanar_non_bad_pairs = 0;   // ordered pairs spanning a non-bad plane
  std::uint64_t quadruple_count = 0;
};

EsgkSummary esgk_summary(const EsgkFamily& family, unsigned threads = 1);

}  // namespace cxd
