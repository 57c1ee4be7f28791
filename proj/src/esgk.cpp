#include "cxdist/esgk.hpp"

#include <stdexcept>

#include "cxdist/parallel.hpp"

namespace cxd {
namespace {

const Rational kHalf(1, 2);

GaussianRational one_plus_square(const GaussianRational& z) { return GaussianRational(1) + z * z; }

}  // namespace

LineC3 esgk_line(const PointC2& a, const PointC2& c) {
  const PointC3 base = vec3((a.x + c.x) * kHalf, (a.y + c.y) * kHalf, 0);
  const Vec3 dir = vec3((a.y - c.y) * kHalf, (c.x - a.x) * kHalf, 1);
  return LineC3::from_direction(base, dir);
}

EsgkFamily esgk_family(std::span<const PointC2> points) {
  require_distinct(points);
  EsgkFamily fam;
  fam.points.assign(points.begin(), points.end());
  const std::size_t n = points.size();
  fam.lines.reserve(n * n);
  fam.source.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      LineC3 l = esgk_line(points[a], points[c]);
      if (!fam.inverse.emplace(l, fam.lines.size()).second)
        throw std::logic_error("esgk_family: two point pairs produced the same line");
      fam.lines.push_back(std::move(l));
      fam.source.emplace_back(a, c);
    }
  return fam;
}

std::uint64_t parallel_pair_count(const EsgkFamily& family) {
  std::map<PointC2, std::uint64_t> diffs;
  for (const auto& [a, c] : family.source) {
    const auto& pa = family.points[a];
    const auto& pc = family.points[c];
    ++diffs[PointC2{pa.x - pc.x, pa.y - pc.y}];
  }
  std::uint64_t total = 0;
  for (const auto& [v, m] : diffs) total += m * (m - 1);
  return total;
}

std::uint64_t parallel_pair_count_bruteforce(const EsgkFamily& family) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < family.lines.size(); ++i)
    for (std::size_t j = 0; j < family.lines.size(); ++j)
      if (i != j && line_pair_relation(family.lines[i], family.lines[j]).kind == LineRelation::Parallel) ++total;
  return total;
}

PointC3 special_point(const PointC2& a, IsotropicSign sign, const GaussianRational& key) {
  const GaussianRational s = slope_of(sign);
  return vec3((a.x - s * a.y + s * key) * kHalf, (a.y + s * a.x + key) * kHalf, -s);
}

QuadricC3 pencil_quadric(const PointC2& a, IsotropicSign sign, const GaussianRational& key) {
  using Poly = MultiPoly<GaussianRational>;
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  auto c = [](const GaussianRational& v) { return Poly::constant(3, v); };
  const GaussianRational s = slope_of(sign);
  // cx (1 - s z) = 2x - ax - ay z + key z
  // cx (s + z)   = 2y - ay - key + ax z
  const Poly lhs = c(2) * x - c(a.x) - c(a.y) * z + c(key) * z;
  const Poly rhs = c(2) * y - c(a.y) - c(key) + c(a.x) * z;
  const Poly f = (c(s) + z) * lhs - (c(1) - c(s) * z) * rhs;
  return QuadricC3::from_poly(f);
}

Vec3 direction_field(const PointC2& a, const PointC3& p) {
  const GaussianRational denom = one_plus_square(p(2));
  if (denom.is_zero()) throw std::domain_error("direction_field: z = +-i has no unique line through the point");
  return vec3(a.y - p(1) + p(2) * (p(0) - a.x), p(0) - a.x + p(2) * (p(1) - a.y), denom);
}

std::array<MultiPoly<GaussianRational>, 3> direction_field_poly(const PointC2& a) {
  using Poly = MultiPoly<GaussianRational>;
  const Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
  auto c = [](const GaussianRational& v) { return Poly::constant(3, v); };
  return {c(a.y) - y + z * (x - c(a.x)), x - c(a.x) + z * (y - c(a.y)), c(1) + z * z};
}

PointC2 solve_partner(const PointC2& a, const PointC3& p) {
  const GaussianRational& z = p(2);
  const GaussianRational denom = one_plus_square(z);
  if (denom.is_zero()) throw std::domain_error("solve_partner: z = +-i has no unique partner");
  const GaussianRational u = GaussianRational(2) * p(0) - a.x - a.y * z;
  const GaussianRational w = GaussianRational(2) * p(1) - a.y + a.x * z;
  return {(u + z * w) / denom, (w - z * u) / denom};
}

MultiPoly<GaussianRational> tangency_poly(const PointC2& a, const QuadricC3& f) {
  const auto field = direction_field_poly(a);
  const auto grad = gradient(f.to_poly());
  MultiPoly<GaussianRational> g(3);
  for (std::size_t i = 0; i < 3; ++i) g += field[i] * grad[i];
  return g;
}

EsgkSummary esgk_summary(const EsgkFamily& family, unsigned threads) {
  EsgkSummary s;
  s.n = family.point_count();
  s.line_count = family.lines.size();
  s.parallel_pairs = parallel_pair_count(family);
  const auto stats = distance_statistics(family.points, threads);
  s.quadruple_count = stats.quadruple_count;

  const std::size_t m = family.lines.size();
  struct Counts {
    std::uint64_t bad = 0, good = 0;
  };
  std::vector<Counts> shards(shard_count(m, threads));
  parallel_shards(m, threads, [&](std::size_t sh, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (!lines_coplanar(family.lines[i], family.lines[j])) continue;
        const auto rel = line_pair_relation(family.lines[i], family.lines[j]);
        if (is_bad_plane(*rel.plane))
          shards[sh].bad += 2;
        else
          shards[sh].good += 2;
      }
  });
  for (const auto& c : shards) {
    s.bad_plane_pairs += c.bad;
    s.coplanar_non_bad_pairs += c.good;
  }
  return s;
}

}  // namespace cxd
