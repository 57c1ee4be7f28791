#include "cxdist/generators.hpp"

#include <set>
#include <stdexcept>

namespace cxd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rng Rng::substream(std::uint64_t stream) const {
  Rng copy = *this;
  return Rng(mix_seed(copy.engine_(), stream));
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

Rational Rng::rational(std::int64_t bound) {
  const std::int64_t num = uniform_int(-bound, bound);
  const std::int64_t den = uniform_int(1, bound);
  return Rational(num, den);
}

GaussianRational Rng::gaussian(std::int64_t bound) {
  Rational re = rational(bound);
  Rational im = rational(bound);
  return {std::move(re), std::move(im)};
}

GaussianRational Rng::gaussian_integer(std::int64_t bound) {
  const std::int64_t re = uniform_int(-bound, bound);
  const std::int64_t im = uniform_int(-bound, bound);
  return {Rational(re), Rational(im)};
}

PointC2 Rng::point(std::int64_t bound) {
  GaussianRational x = gaussian(bound);
  GaussianRational y = gaussian(bound);
  return {std::move(x), std::move(y)};
}

PointC2 Rng::integer_point(std::int64_t bound) {
  GaussianRational x = gaussian_integer(bound);
  GaussianRational y = gaussian_integer(bound);
  return {std::move(x), std::move(y)};
}

std::vector<PointC2> generate_grid(std::size_t k) {
  std::vector<PointC2> pts;
  pts.reserve(k * k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l)
      pts.push_back({GaussianRational(static_cast<long>(j)), GaussianRational(static_cast<long>(l))});
  return pts;
}

std::vector<PointC2> generate_isotropic(std::size_t m, IsotropicSign sign, const GaussianRational& key) {
  const GaussianRational s = slope_of(sign);
  std::vector<PointC2> pts;
  pts.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    const GaussianRational x(static_cast<long>(t));
    pts.push_back({x, s * x + key});
  }
  return pts;
}

namespace {

template <typename Draw>
std::vector<PointC2> distinct_points(std::size_t n, std::size_t attempts, Draw&& draw) {
  std::set<PointC2> seen;
  std::vector<PointC2> pts;
  pts.reserve(n);
  for (std::size_t tries = 0; pts.size() < n; ++tries) {
    if (tries >= attempts) throw std::invalid_argument("generator: could not draw enough distinct points");
    PointC2 p = draw();
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

std::vector<PointC2> generate_random(std::size_t n, std::int64_t bound, std::uint64_t seed) {
  if (bound < 1) throw std::invalid_argument("generate_random: bound must be positive");
  Rng rng = Rng(seed).substream(1);
  return distinct_points(n, 100 * n + 1000, [&] { return rng.point(bound); });
}

std::vector<PointC2> generate_random_integer(std::size_t n, std::int64_t bound, std::uint64_t seed) {
  if (bound < 0) throw std::invalid_argument("generate_random_integer: bound must be nonnegative");
  Rng rng = Rng(seed).substream(2);
  return distinct_points(n, 100 * n + 1000, [&] { return rng.integer_point(bound); });
}

namespace {

PointC3 random_point(Rng& rng, std::int64_t bound) {
  GaussianRational x = rng.gaussian_integer(bound);
  GaussianRational y = rng.gaussian_integer(bound);
  GaussianRational z = rng.gaussian_integer(bound);
  return vec3(std::move(x), std::move(y), std::move(z));
}

}  // namespace

std::vector<LineC3> generate_random_lines(std::size_t count, std::int64_t bound, std::uint64_t seed) {
  Rng rng = Rng(seed).substream(3);
  std::set<LineC3> seen;
  std::vector<LineC3> out;
  for (std::size_t tries = 0; out.size() < count; ++tries) {
    if (tries > 100 * count + 1000) throw std::invalid_argument("generate_random_lines: bound too small");
    PointC3 p = random_point(rng, bound);
    PointC3 q = random_point(rng, bound);
    if (p == q) continue;
    LineC3 l = LineC3::through(p, q);
    if (seen.insert(l).second) out.push_back(std::move(l));
  }
  return out;
}

PlantedLines generate_planted_planes(std::size_t planes, std::size_t per_plane, std::size_t extra, std::uint64_t seed) {
  constexpr std::int64_t kBound = 30;
  Rng rng = Rng(seed).substream(4);
  PlantedLines out;
  std::set<LineC3> seen;

  for (std::size_t p = 0; p < planes; ++p) {
    PlaneC3 plane = PlaneC3::from_equation(vec3(rng.gaussian_integer(kBound), rng.gaussian_integer(kBound), 1),
                                           rng.gaussian_integer(kBound));
    for (const auto& existing : out.planes)
      if (existing == plane) throw std::logic_error("generate_planted_planes: repeated plane");
    out.planes.push_back(plane);
  }

  auto point_on = [&](const PlaneC3& plane) {
    const GaussianRational x = rng.gaussian_integer(kBound);
    const GaussianRational y = rng.gaussian_integer(kBound);
    const Vec3& n = plane.normal();
    const GaussianRational z = (plane.offset() - n(0) * x - n(1) * y) / n(2);
    return vec3(x, y, z);
  };

  for (std::size_t p = 0; p < planes; ++p) {
    std::size_t added = 0;
    for (std::size_t tries = 0; added < per_plane; ++tries) {
      if (tries > 100 * per_plane + 1000) throw std::logic_error("generate_planted_planes: too many collisions");
      const PointC3 a = point_on(out.planes[p]);
      const PointC3 b = point_on(out.planes[p]);
      if (a == b) continue;
      LineC3 l = LineC3::through(a, b);
      if (!seen.insert(l).second) continue;
      out.lines.push_back(std::move(l));
      out.plane_of.push_back(p);
      ++added;
    }
  }

  std::size_t added = 0;
  for (std::size_t tries = 0; added < extra; ++tries) {
    if (tries > 100 * extra + 1000) throw std::logic_error("generate_planted_planes: too many collisions");
    const PointC3 a = random_point(rng, kBound);
    const PointC3 b = random_point(rng, kBound);
    if (a == b) continue;
    LineC3 l = LineC3::through(a, b);
    bool inside = false;
    for (const auto& pl : out.planes) inside = inside || pl.contains(l);
    if (inside || !seen.insert(l).second) continue;
    out.lines.push_back(std::move(l));
    out.plane_of.push_back(planes);
    ++added;
  }
  return out;
}

}  // namespace cxd
