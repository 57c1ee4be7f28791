#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cxdist/lines3.hpp"

namespace cxd {

struct RichPointReport {
  // Exact richness -> points with that richness, each list sorted lexicographically.
  std::map<std::size_t, std::vector<PointC3>> by_richness;
  // Every point met by at least two lines -> sorted indices of the lines through it.
  std::map<PointC3, std::vector<std::size_t>, LexLess> incidences;
  std::size_t max_richness = 0;

  std::size_t count_at_least(std::size_t r) const;
  std::vector<PointC3> at_least(std::size_t r) const;
};

// Throws std::invalid_argument when two input lines coincide.
void require_distinct(std::span<const LineC3> lines);

// All points incident to two or more lines, with exact richness.
RichPointReport rich_points(std::span<const LineC3> lines, unsigned threads = 1);

struct RichPlane {
  PlaneC3 plane;
  std::vector<std::size_t> lines;  // indices of contained lines, ascending
};

struct RichQuadric {
  QuadricC3 quadric;
  std::vector<std::size_t> lines;
};

inline constexpr std::uint64_t kDefaultTripleCap = 5'000'000;

struct SurfaceOptions {
  std::uint64_t triple_cap = kDefaultTripleCap;  // prefix of line triples (i<j<k, lexicographic) examined
  unsigned threads = 1;
  bool quadrics = true;
};

struct RichSurfaceReport {
  std::size_t threshold = 0;
  std::vector<RichPlane> planes;
  std::vector<RichQuadric> quadrics;
  std::uint64_t triples_examined = 0;
  bool triple_cap_reached = false;
};

// Planes and quadrics containing at least `threshold` input lines. Planes come
// from the spans of coplanar pairs (complete for threshold >= 2); quadrics from
// triples of pairwise skew lines whose quadric is unique.
RichSurfaceReport rich_surfaces(std::span<const LineC3> lines, std::size_t threshold, const SurfaceOptions& options = {});

struct StructureReport {
  std::size_t line_count = 0;
  std::size_t r = 0;
  std::size_t r_prime = 0;  // max(2, ceil(r/3))
  double epsilon = 0;
  std::size_t threshold = 0;  // ceil(r * n^(1/2 + epsilon))
  std::vector<RichPlane> planes;
  std::size_t rich_count = 0;  // |P_r|
  std::size_t residual = 0;    // |P_r \ union over planes W of P_r'(L_W)|
  double reference = 0;        // n^(3/2 + epsilon) r^-2
  double ratio = 0;            // residual / reference
};

StructureReport structure_report(std::span<const LineC3> lines, std::size_t r, double epsilon,
                                 const SurfaceOptions& options = {});

}  // namespace cxd
