// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cxdist/cli.hpp"
#include "cxdist/esgk.hpp"
#include "cxdist/incidence.hpp"
#include "cxdist/real_geometry.hpp"
#include "support.hpp"

using namespace cxd;
using cxt::I;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures without stopping, so the detail names the first one.
struct Tally {
  std::size_t cases = 0, failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(std::string summary) const {
    if (failures) return {false, std::to_string(failures) + "/" + std::to_string(cases) + " failed, first: " + first};
    return {true, std::move(summary)};
  }
};

PointC2 pt(GaussianRational x, GaussianRational y) { return {std::move(x), std::move(y)}; }
PointC2 operator+(const PointC2& p, const PointC2& v) { return pt(p.x + v.x, p.y + v.y); }
PointC2 operator-(const PointC2& p, const PointC2& v) { return pt(p.x - v.x, p.y - v.y); }

std::string str(const PointC2& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

GaussianRational gaussian_box(Rng& rng, std::int64_t bound) {
  return {Rational(rng.uniform_int(-bound, bound)), Rational(rng.uniform_int(-bound, bound))};
}

PointC2 point_box(Rng& rng, std::int64_t bound) { return pt(gaussian_box(rng, bound), gaussian_box(rng, bound)); }

// The point of l_{a,c} at height z, from the defining equations.
PointC3 esgk_point(const PointC2& a, const PointC2& c, const GaussianRational& z) {
  const Rational half(1, 2);
  return vec3((a.x + c.x + (a.y - c.y) * z) * half, (a.y + c.y + (c.x - a.x) * z) * half, z);
}

GaussianRational triple_product(const Vec3& u, const Vec3& v, const Vec3& w) {
  return u(0) * (v(1) * w(2) - v(2) * w(1)) - u(1) * (v(0) * w(2) - v(2) * w(0)) + u(2) * (v(0) * w(1) - v(1) * w(0));
}

// Two lines, each through two points, are coplanar iff the four points are.
bool four_points_coplanar(const PointC3& p0, const PointC3& p1, const PointC3& q0, const PointC3& q1) {
  return triple_product(p1 - p0, q0 - p0, q1 - p0).is_zero();
}

bool on_isotropic_line(const PointC2& p, IsotropicSign sign, const GaussianRational& key) {
  return p.y == slope_of(sign) * p.x + key;
}

std::set<GaussianRational> delta_set(const std::vector<PointC2>& p) {
  std::set<GaussianRational> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j) out.insert(delta(p[i], p[j]));
  return out;
}

bool subset(const std::set<GaussianRational>& a, const std::set<GaussianRational>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------

Outcome coplanarity_biconditional() {
  Rng rng(20261);
  Tally t;
  std::size_t coplanar = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    PointC2 a, b, c, d;
    switch (trial % 4) {
      case 0:  // unconstrained rationals
        a = rng.point(100), b = rng.point(100), c = rng.point(100), d = rng.point(100);
        break;
      case 1: {  // d - c is b - a under a quarter turn, a reflection or a sign
        a = point_box(rng, 50), c = point_box(rng, 50);
        const PointC2 v = point_box(rng, 50);
        b = a + v;
        const PointC2 w[] = {v, pt(-v.x, -v.y), pt(-v.y, v.x), pt(v.y, v.x), pt(v.x, -v.y)};
        d = c + w[rng.uniform_int(0, 4)];
        break;
      }
      case 2: {  // a Pythagorean rotation of 5w
        a = point_box(rng, 50), c = point_box(rng, 50);
        const PointC2 w = point_box(rng, 7);
        b = a + pt(5 * w.x, 5 * w.y);
        d = c + pt(3 * w.x - 4 * w.y, 4 * w.x + 3 * w.y);
        break;
      }
      default: {  // isotropic differences, both distances zero when the signs are drawn
        a = point_box(rng, 50), c = point_box(rng, 50);
        const GaussianRational s = gaussian_box(rng, 25), u = gaussian_box(rng, 25);
        b = a + pt(s, (rng.coin() ? I : -I) * s);
        d = c + (rng.coin() ? pt(u, (rng.coin() ? I : -I) * u) : point_box(rng, 50));
        break;
      }
    }
    const bool equal = delta(a, b) == delta(c, d);
    const bool copl = lines_coplanar(esgk_line(a, c), esgk_line(b, d));
    const GaussianRational z0(0), z1(1);
    const bool oracle = four_points_coplanar(esgk_point(a, c, z0), esgk_point(a, c, z1), esgk_point(b, d, z0),
                                             esgk_point(b, d, z1));
    t.check(copl == equal && oracle == copl, "a=" + str(a) + " b=" + str(b) + " c=" + str(c) + " d=" + str(d));
    coplanar += copl;
  }
  t.check(coplanar >= 2500, "too few coplanar cases: " + std::to_string(coplanar));
  return t.outcome("10000 quadruples, " + std::to_string(coplanar) + " coplanar");
}

Outcome bad_plane_biconditional() {
  Rng rng(20262);
  Tally t;
  std::size_t inside = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto sign = rng.coin() ? IsotropicSign::Plus : IsotropicSign::Minus;
    const GaussianRational key = rng.gaussian(20);
    auto on_line = [&] {
      const GaussianRational x = rng.gaussian(20);
      return pt(x, slope_of(sign) * x + key);
    };
    PointC2 a = rng.point(20), c = rng.point(20);
    if (trial % 2 == 0) a = on_line(), c = on_line();
    else if (trial % 4 == 1) (rng.coin() ? a : c) = on_line();
    const bool contained = bad_plane(sign, key).contains(esgk_line(a, c));
    const bool both = on_isotropic_line(a, sign, key) && on_isotropic_line(c, sign, key);
    t.check(contained == both, "a=" + str(a) + " c=" + str(c) + " key=" + key.to_string());
    inside += contained;
  }
  return t.outcome("1000 cases, " + std::to_string(inside) + " contained");
}

Outcome grid_distances() {
  Tally t;
  t.check(distance_statistics(generate_grid(3)).distinct.size() == 5, "grid(3) distinct != 5");
  for (std::size_t k = 3; k <= 30; ++k) {
    const auto pts = generate_grid(k);
    t.check(distance_statistics(pts).distinct == delta_set(pts), "k=" + std::to_string(k));
  }
  return t.outcome("grid(3) has 5 distances, k=3..30 match the pair loop");
}

Outcome quadruple_identity() {
  Tally t;
  const std::vector<PointC2> square{pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
  t.check(distance_statistics(square).quadruple_count == 68, "unit square histogram count");
  t.check(quadruples_bruteforce(square) == 68, "unit square enumeration");
  Rng rng(20264);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 12));
    std::vector<PointC2> p;
    switch (trial % 4) {
      case 0: p = generate_random_integer(n, 2, rng.next()); break;
      case 1: p = generate_random(n, 5, rng.next()); break;
      case 2: {
        p = generate_isotropic(std::min<std::size_t>(n, 6), IsotropicSign::Plus, 0);
        for (const auto& q : generate_random_integer(n, 2, rng.next()))
          if (p.size() < n && std::find(p.begin(), p.end(), q) == p.end()) p.push_back(q);
        break;
      }
      default: {
        auto g = generate_grid(4);
        std::shuffle(g.begin(), g.end(), std::mt19937_64(rng.next()));
        g.resize(n);
        p = g;
        break;
      }
    }
    t.check(distance_statistics(p).quadruple_count == quadruples_bruteforce(p), "trial " + std::to_string(trial));
  }
  return t.outcome("unit square 68 both ways, 50 random sets agree");
}

Outcome growth_sets_check() {
  Tally t;
  const auto g = growth_sets(std::vector<GaussianRational>{0, 1, 2});
  t.check(g.plus.size() == 6 && g.minus.size() == 7 && g.product.size() == 7, "sizes for {0,1,2}");
  auto with_zero = [](std::set<GaussianRational> s) {
    s.insert(0);
    return s;
  };
  Rng rng(20265);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<GaussianRational> values;
    const auto size = static_cast<std::size_t>(rng.uniform_int(1, 8));
    while (values.size() < size) values.insert(rng.gaussian(6));
    const auto s = growth_sets(std::vector<GaussianRational>(values.begin(), values.end()));
    const auto d1 = delta_set(s.square_grid), d2 = delta_set(s.twisted_grid), d3 = delta_set(s.sum_difference);
    std::set<GaussianRational> scaled;
    for (const auto& v : s.product) scaled.insert(GaussianRational(4) * v);
    const std::string tag = "trial " + std::to_string(trial);
    t.check(subset(d1, s.plus) && subset(s.plus, with_zero(d1)), tag + " plus");
    t.check(subset(d2, s.minus) && subset(s.minus, with_zero(d2)), tag + " minus");
    t.check(subset(d3, scaled) && subset(scaled, with_zero(d3)), tag + " product");
  }
  return t.outcome("(6, 7, 7) for {0,1,2}, inclusions on 20 random sets");
}

// Point sets shared by the cap, parallel-pair and counting criteria.
struct Family {
  std::string name;
  std::vector<PointC2> points;
};

std::vector<Family> tested_families() {
  std::vector<Family> out;
  const auto shift = pt(GaussianRational(Rational(1, 3)), GaussianRational(Rational(1, 7)));
  out.push_back({"grid-2", generate_grid(2)});
  out.push_back({"grid-3", generate_grid(3)});
  auto shifted = generate_grid(3);
  for (auto& p : shifted) p = p + shift;
  out.push_back({"grid-3-shifted", shifted});
  out.push_back({"isotropic-15+0", generate_isotropic(15, IsotropicSign::Plus, 0)});
  out.push_back({"isotropic-15-(1+i)", generate_isotropic(15, IsotropicSign::Minus, GaussianRational(1, 1))});
  out.push_back({"random-int-15", generate_random_integer(15, 20, 20266)});
  out.push_back({"random-int-12-small", generate_random_integer(12, 2, 20267)});
  out.push_back({"random-15", generate_random(15, 10, 20268)});
  auto mixed = generate_isotropic(7, IsotropicSign::Plus, 2);
  for (const auto& q : generate_random_integer(8, 5, 20269))
    if (std::find(mixed.begin(), mixed.end(), q) == mixed.end()) mixed.push_back(q);
  out.push_back({"isotropic-7+random-8", mixed});
  return out;
}

bool avoids_origin_isotropic_lines(const std::vector<PointC2>& p) {
  const auto classes = isotropic_classify(p);
  return !classes.plus.count(GaussianRational(0)) && !classes.minus.count(GaussianRational(0));
}

Outcome richness_caps() {
  Tally t;
  std::size_t runs = 0;
  for (const auto& f : tested_families()) {
    const auto fam = esgk_family(f.points);
    const std::size_t n = f.points.size();
    t.check(rich_points(fam.lines).max_richness <= n, f.name + " max richness");
    const auto rep = rich_surfaces(fam.lines, std::max<std::size_t>(3, n));
    ++runs;
    if (avoids_origin_isotropic_lines(f.points))
      for (const auto& w : rep.planes)
        t.check(is_bad_plane(w.plane) || w.lines.size() <= 2 * n, f.name + " plane " + w.plane.to_string());
    for (const auto& q : rep.quadrics) t.check(q.lines.size() <= 6 * n, f.name + " quadric " + q.quadric.to_string());
    t.check(!rep.triple_cap_reached, f.name + " triple cap reached");
  }
  return t.outcome(std::to_string(runs) + " families up to 225 lines");
}

Outcome parallel_pairs() {
  Tally t;
  const std::vector<PointC2> square{pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
  t.check(parallel_pair_count(esgk_family(square)) == 20, "unit square");
  auto families = tested_families();
  families.push_back({"unit-square", square});
  for (const auto& f : families) {
    const auto fam = esgk_family(f.points);
    const auto n = static_cast<std::uint64_t>(f.points.size());
    const auto fast = parallel_pair_count(fam);
    t.check(fast == parallel_pair_count_bruteforce(fam) && fast <= n * n * n, f.name);
  }
  return t.outcome("unit square 20, " + std::to_string(families.size()) + " families match the pair scan");
}

Outcome counting_inequalities() {
  Tally t;
  std::vector<std::pair<std::string, std::vector<LineC3>>> sets;
  for (const auto& f : tested_families()) sets.emplace_back(f.name, esgk_family(f.points).lines);
  sets.emplace_back("planted-3x20+40", generate_planted_planes(3, 20, 40, 20263).lines);
  sets.emplace_back("random-lines-60", generate_random_lines(60, 3, 20270));
  std::size_t surface_runs = 0;
  for (const auto& [name, lines] : sets) {
    const double n = static_cast<double>(lines.size());
    const auto points = rich_points(lines);
    for (std::size_t r = 2; r <= 2 * lines.size() + 1; ++r)
      if (static_cast<double>(r) >= 2 * n || static_cast<double>(r) >= 2 * std::sqrt(n))
        t.check(static_cast<double>(points.count_at_least(r)) <= 2 * n / static_cast<double>(r),
                name + " rich points r=" + std::to_string(r));

    SurfaceOptions planes_only;
    planes_only.quadrics = false;
    const auto a_plane = static_cast<std::size_t>(std::ceil(2 * std::sqrt(n)));
    const auto a_quad = static_cast<std::size_t>(std::ceil(8 * std::sqrt(n)));
    const auto planes = rich_surfaces(lines, a_plane, planes_only);
    t.check(static_cast<double>(planes.planes.size()) <= 2 * n / static_cast<double>(a_plane), name + " planes");
    const auto both = rich_surfaces(lines, a_quad);
    t.check(static_cast<double>(both.planes.size() + both.quadrics.size()) <= 2 * n / static_cast<double>(a_quad),
            name + " planes and quadrics");
    surface_runs += 2;
  }
  return t.outcome(std::to_string(sets.size()) + " line sets, " + std::to_string(surface_runs) + " surface runs");
}

// --- real geometry -----------------------------------------------------------

RealPoly x6(std::size_t i) { return RealPoly::variable(6, i); }

Rational dot6(const RealPoint6& u, const RealPoint6& v) {
  Rational s;
  for (int i = 0; i < 6; ++i) s += u(i) * v(i);
  return s;
}

LineC3 random_standard_line(Rng& rng, std::int64_t bound) {
  return LineC3::from_direction(vec3(0, rng.gaussian_integer(bound), rng.gaussian_integer(bound)),
                                vec3(1, rng.gaussian_integer(bound), rng.gaussian_integer(bound)));
}

std::array<RealPoly, 4> line_equations(const StandardLineCoords& g) {
  const auto& [a1, a2, b1, b2, c1, c2, d1, d2] = g.values;
  auto k = [](const Rational& v) { return RealPoly::constant(6, v); };
  return {x6(2) - k(a1) - k(c1) * x6(0) + k(c2) * x6(1), x6(3) - k(a2) - k(c2) * x6(0) - k(c1) * x6(1),
          x6(4) - k(b1) - k(d1) * x6(0) + k(d2) * x6(1), x6(5) - k(b2) - k(d2) * x6(0) - k(d1) * x6(1)};
}

// A polynomial of degree e in (s, t) vanishing on an (e+1)^2 grid is zero.
bool vanishes_on_grid(const RealPoly& f, const StandardLineCoords& g) {
  const int side = std::max(f.degree(), 0) + 1;
  for (int s = 0; s < side; ++s)
    for (int u = 0; u < side; ++u)
      if (!f.eval(phi(g, Rational(s), Rational(u))).is_zero()) return false;
  return true;
}

bool meets(const LineC3& a, const LineC3& b) {
  const auto k = line_pair_relation(a, b).kind;
  return k == LineRelation::Equal || k == LineRelation::Intersecting;
}

PointC3 point3(Rng& rng) { return vec3(rng.gaussian_integer(5), rng.gaussian_integer(5), rng.gaussian_integer(5)); }

LineC3 random_line(Rng& rng) {
  for (;;) {
    const PointC3 p = point3(rng), q = point3(rng);
    if (!(p == q)) return LineC3::through(p, q);
  }
}

void membership_conditions(Tally& t) {
  Rng rng(20271);
  for (int trial = 0; trial < 1000; ++trial) {
    const StandardLineCoords g = g_coords(random_standard_line(rng, 2));
    RealPoly f = cxt::random_rpoly(rng, 6, 3, 5);
    if (trial % 2 == 0) {
      RealPoly ideal(6);
      for (const auto& e : line_equations(g)) ideal += RealPoly::constant(6, Rational(rng.uniform_int(-3, 3))) * e;
      f = cxt::random_rpoly(rng, 6, 2, 4) * ideal;
    }
    const auto conditions = line_membership_conditions(f);
    t.check(satisfies_conditions(conditions, g) == vanishes_on_grid(f, g), "membership trial " + std::to_string(trial));
  }
}

void g_round_trip(Tally& t) {
  Rng rng(20272);
  for (int trial = 0; trial < 1000; ++trial) {
    GaussianRational lead = rng.gaussian(4);
    if (lead.is_zero()) lead = 1;
    const LineC3 l = LineC3::from_direction(vec3(rng.gaussian(4), rng.gaussian(4), rng.gaussian(4)),
                                            vec3(lead, rng.gaussian(4), rng.gaussian(4)));
    t.check(g_inverse(g_coords(l)) == l, "G round trip " + l.to_string());
    StandardLineCoords g;
    for (auto& v : g.values) v = rng.rational(6);
    t.check(g_coords(g_inverse(g)) == g, "G inverse round trip");
  }
}

void common_lines(Tally& t) {
  Rng rng(20273);
  for (int trial = 0; trial < 500; ++trial) {
    const PointC3 p = point3(rng);
    PointC3 q = point3(rng);
    if (trial % 3 == 0) q(0) = p(0);
    if (p == q) continue;
    const auto common = common_standard_line(p, q);
    const LineC3 pq = LineC3::through(p, q);
    t.check(common.has_value() == is_standard(pq), "common line existence");
    if (common) t.check(g_inverse(*common) == pq, "common line is the line through both");
  }
}

void hairbrush(Tally& t) {
  Rng rng(20274);
  for (int trial = 0; trial < 300; ++trial) {
    const PointC3 p = point3(rng);
    const Vec3 d1 = point3(rng) + vec3(0, 0, 11), d2 = point3(rng) + vec3(13, 0, 0);
    const LineC3 l = LineC3::from_direction(p, d1), l2 = LineC3::from_direction(p, d2);
    const auto rel = line_pair_relation(l, l2);
    if (rel.kind != LineRelation::Intersecting) continue;
    for (int k = 0; k < 8; ++k) {
      LineC3 m = l;
      if (k % 4 == 0) {
        m = LineC3::from_direction(p, point3(rng) + vec3(1, 17, 0));
      } else if (k % 4 == 1) {
        const Vec3 dir = rng.gaussian_integer(3) * d1 + rng.gaussian_integer(3) * d2;
        if (is_zero(dir)) continue;
        m = LineC3::from_direction(p + rng.gaussian_integer(3) * d1 + rng.gaussian_integer(3) * d2, dir);
      } else if (k % 4 == 2) {
        m = LineC3::from_direction(p + d2, d1);
      } else {
        m = random_line(rng);
      }
      const bool through_p = m.contains(p), in_plane = rel.plane->contains(m);
      const bool both = meets(m, l) && meets(m, l2);
      const bool parallel = m.direction() == l.direction() || m.direction() == l2.direction();
      if (through_p) t.check(both, "hairbrush (a)");
      if (in_plane && !parallel) t.check(both, "hairbrush (b)");
      if (both) t.check(through_p || in_plane, "hairbrush (c)");
    }
  }
}

void e_vectors(Tally& t) {
  Rng rng(20275);
  for (int trial = 0; trial < 300; ++trial) {
    const RealPoly f = cxt::random_rpoly(rng, 6, 3, 6);
    RealPoint6 p;
    for (int i = 0; i < 6; ++i) p(i) = rng.rational(4);
    ComplexTangentFrame frame;
    try {
      frame = complex_tangent_frame(f, p);
    } catch (const SingularPointError&) {
      continue;
    }
    for (const auto& e : frame.e_vectors)
      t.check(dot6(e, frame.gradient).is_zero() && dot6(e, frame.j_gradient).is_zero(), "E orthogonality");
  }
}

// Inverse stereographic projection: rational points on the unit 5-sphere.
RealPoint6 sphere_point(Rng& rng) {
  std::array<Rational, 5> u;
  Rational norm;
  for (auto& v : u) {
    v = rng.rational(4);
    norm += v * v;
  }
  RealPoint6 p;
  const Rational denom = norm + Rational(1);
  for (int i = 0; i < 5; ++i) p(i) = Rational(2) * u[static_cast<std::size_t>(i)] / denom;
  p(5) = (norm - Rational(1)) / denom;
  return p;
}

void ruled_examples(Tally& t) {
  Rng rng(20276);
  RealPoly sphere = RealPoly::constant(6, Rational(-1));
  for (std::size_t i = 0; i < 6; ++i) sphere += x6(i) * x6(i);
  for (int trial = 0; trial < 100; ++trial) {
    RealPoly h(6);
    for (std::size_t i = 0; i < 6; ++i) h += RealPoly::constant(6, Rational(rng.uniform_int(-4, 4))) * x6(i);
    if (h.is_zero()) continue;
    RealPoint6 p;
    for (int i = 0; i < 6; ++i) p(i) = rng.rational(5);
    h -= RealPoly::constant(6, h.eval(p));
    t.check(ruled_at_point(h, p), "hyperplane not ruled");

    const RealPoint6 s = sphere_point(rng);
    t.check(sphere.eval(s).is_zero() && !ruled_at_point(sphere, s), "sphere ruled");
  }
}

Outcome real_geometry_suite() {
  Tally t;
  membership_conditions(t);
  g_round_trip(t);
  common_lines(t);
  hairbrush(t);
  e_vectors(t);
  ruled_examples(t);
  return t.outcome(std::to_string(t.cases) + " checks");
}

// --- planted structure --------------------------------------------------------

std::map<PointC3, std::size_t, LexLess> richness_oracle(const std::vector<LineC3>& lines) {
  std::set<PointC3, LexLess> points;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (const auto rel = line_pair_relation(lines[i], lines[j]); rel.point) points.insert(*rel.point);
  std::map<PointC3, std::size_t, LexLess> out;
  for (const auto& p : points)
    for (const auto& l : lines) out[p] += l.contains(p);
  return out;
}

Outcome planted_structure() {
  Tally t;
  for (std::uint64_t seed : {20263u, 7u, 99u}) {
    const auto planted = generate_planted_planes(3, 20, 40, seed);
    const std::string tag = "seed " + std::to_string(seed);
    const auto rep = rich_surfaces(planted.lines, 10);
    std::set<PlaneC3> found;
    for (const auto& w : rep.planes) {
      found.insert(w.plane);
      std::vector<std::size_t> inside;
      for (std::size_t i = 0; i < planted.lines.size(); ++i)
        if (w.plane.contains(planted.lines[i])) inside.push_back(i);
      t.check(w.lines == inside, tag + " plane line list");
    }
    t.check(found == std::set<PlaneC3>(planted.planes.begin(), planted.planes.end()), tag + " planes");
    t.check(rep.quadrics.empty(), tag + " quadrics");

    const auto oracle = richness_oracle(planted.lines);
    for (std::size_t r : {2, 3}) {
      const auto s = structure_report(planted.lines, r, 0.0);
      std::vector<std::size_t> rich_planes;
      for (std::size_t w = 0; w < planted.planes.size(); ++w) {
        std::size_t count = 0;
        for (const auto& l : planted.lines) count += planted.planes[w].contains(l);
        if (count >= s.threshold) rich_planes.push_back(w);
      }
      std::size_t rich = 0, residual = 0;
      for (const auto& [p, k] : oracle) {
        if (k < r) continue;
        ++rich;
        bool covered = false;
        for (auto w : rich_planes) {
          std::size_t inside = 0;
          for (std::size_t i = 0; i < planted.lines.size(); ++i)
            inside += planted.plane_of[i] == w && planted.lines[i].contains(p);
          covered = covered || inside >= s.r_prime;
        }
        residual += !covered;
      }
      const std::string rt = tag + " r=" + std::to_string(r);
      t.check(s.planes.size() == rich_planes.size(), rt + " plane count");
      t.check(s.rich_count == rich && s.residual == residual, rt + " residual " + std::to_string(s.residual) +
                                                                  " vs " + std::to_string(residual));
    }
  }
  return t.outcome("3 seeds, planes exact, residual matches the recount");
}

// --- determinism ----------------------------------------------------------------

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cxdist_acceptance";
  fs::create_directories(dir);
  const std::string pts = (dir / "points.json").string(), lines = (dir / "lines.json").string();
  std::ofstream(pts) << cli({"gen", "random-integer", "--n", "8", "--bound", "3", "--seed", "11"}).out;
  std::ofstream(lines) << cli({"gen", "planted-planes", "--planes", "2", "--per-plane", "8", "--extra", "10", "--seed", "12"}).out;

  const std::vector<std::vector<std::string>> commands{
      {"gen", "grid", "--k", "4"},
      {"gen", "isotropic", "--m", "5", "--sign", "-", "--key", "1+i"},
      {"gen", "random", "--n", "6", "--seed", "5"},
      {"gen", "random-integer", "--n", "6", "--seed", "5"},
      {"gen", "product", "--values", "0,1,2,i", "--construction", "sum-difference"},
      {"gen", "planted-planes", "--planes", "2", "--per-plane", "5", "--extra", "4", "--seed", "5"},
      {"gen", "random-lines", "--count", "12", "--seed", "5"},
      {"distances", pts},
      {"esgk", pts},
      {"rich", pts},
      {"rich", lines, "--r", "3"},
      {"surfaces", pts, "-A", "4"},
      {"surfaces", lines, "-A", "5"},
      {"structure", lines, "--r", "2"},
      {"structure", pts, "--r", "3", "--epsilon", "0.1"},
      {"sumprod", "--values", "0,1,2"},
      {"sumprod", "--random", "6", "--seed", "5"},
      {"verify", pts},
      {"verify", lines},
      {"report", "--grid-max", "8", "--random-max", "8", "--isotropic-max", "6", "--seed", "5"},
  };
  Tally t;
  for (const auto& c : commands)
    for (const char* format : {"json", "csv"}) {
      std::string joined;
      for (const auto& a : c) joined += a + " ";
      joined += "--format ";
      joined += format;
      std::vector<Run> runs;
      for (const char* threads : {"1", "8", "1", "8"}) {
        auto args = c;
        args.insert(args.end(), {"--format", format, "--threads", threads});
        runs.push_back(cli(args));
      }
      bool same = runs[0].code == kExitOk;
      for (const auto& r : runs) same = same && r.code == runs[0].code && r.out == runs[0].out && !r.out.empty();
      t.check(same, joined);
    }
  fs::remove_all(dir);
  return t.outcome(std::to_string(t.cases) + " command lines, 4 runs each");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "coplanarity iff equal distance", 10, coplanarity_biconditional},
      {2, "bad plane containment iff isotropic endpoints", 5, bad_plane_biconditional},
      {3, "grid distance counts", 60, grid_distances},
      {4, "quadruple identity", 0, quadruple_identity},
      {5, "growth sets", 0, growth_sets_check},
      {6, "richness caps on L(P)", 60, richness_caps},
      {7, "parallel pair count", 0, parallel_pairs},
      {8, "rich point and rich surface counting bounds", 0, counting_inequalities},
      {9, "real geometry suite", 30, real_geometry_suite},
      {10, "planted structure recovery", 0, planted_structure},
      {11, "determinism across threads and repeats", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool ok = o.ok && in_time;
    failed += !ok;
    char timing[64];
    if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (c.id < 10 ? " " : "") << c.id << "  " << c.name << "  [" << timing
              << "]  " << o.detail << (in_time ? "" : " (over time limit)") << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
