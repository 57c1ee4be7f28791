#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cxdist/complex_plane.hpp"
#include "cxdist/lines3.hpp"

namespace cxd {

// Seedable generator with a portable output stream.
//
// The engine is mt19937_64, whose output sequence is fixed by the C++
// standard; bounded integers are drawn by rejection sampling rather than
// through <random> distributions, whose algorithms vary between standard
// libraries. Independent consumers take their own stream via substream(),
// so adding draws in one place never shifts the values seen by another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Deterministic child generator for a named purpose.
  Rng substream(std::uint64_t stream) const;

  std::uint64_t next() { return engine_(); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive
  bool coin() { return (next() >> 63) != 0; }

  // num/den with |num| <= bound, 1 <= den <= bound.
  Rational rational(std::int64_t bound);
  GaussianRational gaussian(std::int64_t bound);
  GaussianRational gaussian_integer(std::int64_t bound);
  PointC2 point(std::int64_t bound);
  PointC2 integer_point(std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// The k x k integer grid {0..k-1}^2, row-major.
std::vector<PointC2> generate_grid(std::size_t k);

// m points (t, s t + key), t = 0..m-1, on one isotropic line.
std::vector<PointC2> generate_isotropic(std::size_t m, IsotropicSign sign, const GaussianRational& key);

// n distinct points with Gaussian rational coordinates (|num|, den <= bound).
// Throws std::invalid_argument when bound is too small to supply n points.
std::vector<PointC2> generate_random(std::size_t n, std::int64_t bound, std::uint64_t seed);

// Same, with Gaussian integer coordinates in [-bound, bound].
std::vector<PointC2> generate_random_integer(std::size_t n, std::int64_t bound, std::uint64_t seed);

struct PlantedLines {
  std::vector<LineC3> lines;
  std::vector<PlaneC3> planes;                 // the planted planes
  std::vector<std::size_t> plane_of;           // line index -> plane index, or planes.size() for generic lines
};

// `planes` random planes, `per_plane` distinct lines inside each, and `extra`
// random lines outside all of them. All lines are distinct.
PlantedLines generate_planted_planes(std::size_t planes, std::size_t per_plane, std::size_t extra, std::uint64_t seed);

// `count` distinct random lines through Gaussian-integer points.
std::vector<LineC3> generate_random_lines(std::size_t count, std::int64_t bound, std::uint64_t seed);

}  // namespace cxd
