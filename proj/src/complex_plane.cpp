#include "cxdist/complex_plane.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cxdist/parallel.hpp"

namespace cxd {

GaussianRational delta(const PointC2& p, const PointC2& q) {
  const GaussianRational dx = p.x - q.x;
  const GaussianRational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

void require_distinct(std::span<const PointC2> points) {
  std::set<PointC2> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen.insert(points[i]).second)
      throw std::invalid_argument("duplicate point at index " + std::to_string(i) + ": (" + points[i].x.to_string() +
                                  ", " + points[i].y.to_string() + ")");
  }
}

DistanceStatistics distance_statistics(std::span<const PointC2> points, unsigned threads) {
  require_distinct(points);
  const std::size_t n = points.size();

  struct Shard {
    std::map<GaussianRational, std::uint64_t> histogram;
    std::uint64_t zero_pairs = 0;
  };
  std::vector<Shard> shards(shard_count(n, threads));
  parallel_shards(n, threads, [&](std::size_t s, std::size_t begin, std::size_t end) {
    auto& out = shards[s];
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        GaussianRational d = delta(points[i], points[j]);
        if (d.is_zero())
          out.zero_pairs += 2;
        else
          out.histogram[std::move(d)] += 2;
      }
  });

  DistanceStatistics stats;
  for (auto& sh : shards) {
    stats.zero_pairs += sh.zero_pairs;
    for (auto& [d, c] : sh.histogram) stats.histogram[d] += c;
  }
  for (const auto& [d, c] : stats.histogram) {
    stats.distinct.insert(d);
    stats.quadruple_count += c * (c - 1);
  }
  if (stats.zero_pairs > 0) stats.distinct.insert(GaussianRational(0));
  return stats;
}

std::uint64_t quadruples_bruteforce(std::span<const PointC2> points, std::size_t cap) {
  const std::size_t n = points.size();
  if (n > cap)
    throw std::length_error("quadruple enumeration capped at " + std::to_string(cap) + " points, got " +
                            std::to_string(n));
  require_distinct(points);
  std::vector<GaussianRational> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = delta(points[i], points[j]);
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ab = d[a * n + b];
      if (ab.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          if (a == c && b == e) continue;
          if (d[c * n + e] == ab) ++count;
        }
    }
  return count;
}

GaussianRational isotropic_key(const PointC2& p, IsotropicSign sign) { return p.y - slope_of(sign) * p.x; }

IsotropicClasses isotropic_classify(std::span<const PointC2> points) {
  IsotropicClasses out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.plus[isotropic_key(points[i], IsotropicSign::Plus)].push_back(i);
    out.minus[isotropic_key(points[i], IsotropicSign::Minus)].push_back(i);
  }
  for (const auto& [k, v] : out.plus) out.plus_cover = std::max(out.plus_cover, v.size());
  for (const auto& [k, v] : out.minus) out.minus_cover = std::max(out.minus_cover, v.size());
  return out;
}

GrowthSets growth_sets(std::span<const GaussianRational> values) {
  const std::set<GaussianRational> a(values.begin(), values.end());
  std::set<GaussianRational> diffs;
  for (const auto& x : a)
    for (const auto& y : a) diffs.insert(x - y);

  GrowthSets out;
  std::set<GaussianRational> squares;
  for (const auto& d : diffs) squares.insert(d * d);
  for (const auto& s : squares)
    for (const auto& t : squares) {
      out.plus.insert(s + t);
      out.minus.insert(s - t);
    }
  for (const auto& d : diffs)
    for (const auto& e : diffs) out.product.insert(d * e);

  const GaussianRational i = GaussianRational::i();
  for (const auto& x : a)
    for (const auto& y : a) {
      out.square_grid.push_back({x, y});
      out.twisted_grid.push_back({x, i * y});
      out.sum_difference.push_back({x + y, i * x - i * y});
    }
  return out;
}

}  // namespace cxd
