#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cxdist/complex_plane.hpp"
#include "cxdist/incidence.hpp"
#include "cxdist/lines3.hpp"
#include "cxdist/real_geometry.hpp"

namespace cxd {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals are strings "n/d" (or "n"); plain JSON integers are accepted on input.
Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);  // {"re": ..., "im": ...}
Json to_json(const PointC2& p);           // {"x": ..., "y": ...}
Json to_json(const Vec3& v);              // [z1, z2, z3]
Json to_json(const LineC3& l);            // {"base": [...], "dir": [...]}
Json to_json(const PlaneC3& p);           // {"normal": [...], "offset": ...}
Json to_json(const QuadricC3& q);         // {"coefficients": [10 values]}
Json to_json(const RealPoly& f);          // [{"exponents": [...], "coeff": ...}]

Rational rational_from_json(const Json& j);
// Also accepts a bare rational for a real value.
GaussianRational gaussian_from_json(const Json& j);
PointC2 point_from_json(const Json& j);
Vec3 vec3_from_json(const Json& j);
// Any base point and nonzero direction; the result is canonical.
LineC3 line_from_json(const Json& j);
RealPoly real_poly_from_json(const Json& j, std::size_t variables = 6);

// A dataset holds points, lines, or both. When both are present the lines
// are read as the family indexed lines[a * n + c].
struct Dataset {
  std::optional<std::vector<PointC2>> points;
  std::optional<std::vector<LineC3>> lines;
};

Json to_json(const Dataset& d);
Dataset dataset_from_json(const Json& j);
// "-" reads standard input. Throws ParseError with the offending location.
Dataset load_dataset(const std::string& path);

// Two-space indented with a trailing newline.
std::string dump(const Json& j);

Json to_json(const DistanceStatistics& s);
// One row per nonzero distance: re,im,count.
std::string to_csv(const DistanceStatistics& s);

// Comma-separated Gaussian rationals such as "0,1/2,3+2i,-i".
GaussianRational parse_gaussian(std::string_view text);
std::vector<GaussianRational> parse_gaussian_list(std::string_view text);

}  // namespace cxd
