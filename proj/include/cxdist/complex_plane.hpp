#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "cxdist/gaussian.hpp"

namespace cxd {

struct PointC2 {
  GaussianRational x;
  GaussianRational y;

  friend bool operator==(const PointC2&, const PointC2&) = default;
  friend auto operator<=>(const PointC2&, const PointC2&) = default;
};

// Which family of isotropic lines: slope +i (y = ix + k) or slope -i (y = -ix + k).
enum class IsotropicSign { Plus, Minus };

inline GaussianRational slope_of(IsotropicSign s) {
  return s == IsotropicSign::Plus ? GaussianRational::i() : -GaussianRational::i();
}

// Squared complex distance (px-qx)^2 + (py-qy)^2. Vanishes exactly on isotropic pairs.
GaussianRational delta(const PointC2& p, const PointC2& q);

struct DistanceStatistics {
  std::set<GaussianRational> distinct;                  // every value of delta over p != q, 0 included
  std::map<GaussianRational, std::uint64_t> histogram;  // nonzero values -> ordered pair count
  std::uint64_t quadruple_count = 0;                    // sum over values of N(N-1)
  std::uint64_t zero_pairs = 0;                         // ordered distinct pairs at distance 0
};

// Throws std::invalid_argument naming the first repeated point.
void require_distinct(std::span<const PointC2> points);

DistanceStatistics distance_statistics(std::span<const PointC2> points, unsigned threads = 1);

inline constexpr std::size_t kDefaultQuadrupleCap = 50;

// Enumerates all |P|^4 ordered quadruples. Throws std::length_error past the cap.
std::uint64_t quadruples_bruteforce(std::span<const PointC2> points, std::size_t cap = kDefaultQuadrupleCap);

// Key of the isotropic line through p: y - s*x for slope s.
GaussianRational isotropic_key(const PointC2& p, IsotropicSign sign);

struct IsotropicClasses {
  std::size_t plus_cover = 0;
  std::size_t minus_cover = 0;
  std::map<GaussianRational, std::vector<std::size_t>> plus;   // key -> point indices
  std::map<GaussianRational, std::vector<std::size_t>> minus;
};

IsotropicClasses isotropic_classify(std::span<const PointC2> points);

struct GrowthSets {
  std::set<GaussianRational> plus;     // (a1-a2)^2 + (a3-a4)^2
  std::set<GaussianRational> minus;    // (a1-a2)^2 - (a3-a4)^2
  std::set<GaussianRational> product;  // (a1-a2)(a3-a4)
  std::vector<PointC2> square_grid;    // A x A
  std::vector<PointC2> twisted_grid;   // A x iA
  std::vector<PointC2> sum_difference; // {(a1+a2, i a1 - i a2)}
};

GrowthSets growth_sets(std::span<const GaussianRational> values);

}  // namespace cxd
