#include "cxdist/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace cxd {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Json to_json(const PointC2& p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const Vec3& v) { return Json::array({to_json(v(0)), to_json(v(1)), to_json(v(2))}); }

Json to_json(const LineC3& l) { return Json{{"base", to_json(l.base())}, {"dir", to_json(l.direction())}}; }

Json to_json(const PlaneC3& p) { return Json{{"normal", to_json(p.normal())}, {"offset", to_json(p.offset())}}; }

Json to_json(const QuadricC3& q) {
  Json c = Json::array();
  for (const auto& v : q.coefficients()) c.push_back(to_json(v));
  return Json{{"coefficients", c}};
}

Json to_json(const RealPoly& f) {
  Json out = Json::array();
  for (const auto& [mono, c] : f.terms()) out.push_back(Json{{"exponents", mono}, {"coeff", to_json(c)}});
  return out;
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(trim(j.get<std::string>()));
  } catch (const std::exception& e) {
    fail("rational", e.what());
  }
  fail("rational", "expected a string \"n/d\" or an integer, got " + j.dump());
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    if (!j.contains("re") && !j.contains("im")) fail("gaussian", "expected fields 're' and 'im' in " + j.dump());
    return {re, im};
  }
  if (j.is_string()) {
    try {
      return parse_gaussian(j.get<std::string>());
    } catch (const std::exception& e) {
      fail("gaussian", e.what());
    }
  }
  return rational_from_json(j);
}

PointC2 point_from_json(const Json& j) {
  return {gaussian_from_json(field(j, "x", "point")), gaussian_from_json(field(j, "y", "point"))};
}

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail("vector", "expected an array of 3 entries, got " + j.dump());
  return vec3(gaussian_from_json(j[0]), gaussian_from_json(j[1]), gaussian_from_json(j[2]));
}

LineC3 line_from_json(const Json& j) {
  const Vec3 base = vec3_from_json(field(j, "base", "line"));
  const Vec3 dir = vec3_from_json(field(j, "dir", "line"));
  try {
    return LineC3::from_direction(base, dir);
  } catch (const std::invalid_argument& e) {
    fail("line", e.what());
  }
}

RealPoly real_poly_from_json(const Json& j, std::size_t variables) {
  if (!j.is_array()) fail("polynomial", "expected an array of terms");
  RealPoly f(variables);
  for (const auto& term : j) {
    const Json& e = field(term, "exponents", "polynomial term");
    if (!e.is_array() || e.size() != variables)
      fail("polynomial term", "expected " + std::to_string(variables) + " exponents, got " + e.dump());
    Monomial m;
    for (const auto& v : e) {
      if (!v.is_number_unsigned()) fail("polynomial term", "exponents must be nonnegative integers");
      m.push_back(v.get<unsigned>());
    }
    f += RealPoly::monomial(std::move(m), rational_from_json(field(term, "coeff", "polynomial term")));
  }
  return f;
}

Json to_json(const Dataset& d) {
  Json out = Json::object();
  if (d.points) {
    Json pts = Json::array();
    for (const auto& p : *d.points) pts.push_back(to_json(p));
    out["points"] = std::move(pts);
  }
  if (d.lines) {
    Json ls = Json::array();
    for (const auto& l : *d.lines) ls.push_back(to_json(l));
    out["lines"] = std::move(ls);
  }
  return out;
}

Dataset dataset_from_json(const Json& j) {
  if (!j.is_object()) fail("dataset", "expected an object with 'points' and/or 'lines'");
  Dataset d;
  if (j.contains("points")) {
    const Json& pts = j.at("points");
    if (!pts.is_array()) fail("dataset", "'points' must be an array");
    d.points.emplace();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      try {
        d.points->push_back(point_from_json(pts[i]));
      } catch (const ParseError& e) {
        fail("points[" + std::to_string(i) + "]", e.what());
      }
    }
  }
  if (j.contains("lines")) {
    const Json& ls = j.at("lines");
    if (!ls.is_array()) fail("dataset", "'lines' must be an array");
    d.lines.emplace();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      try {
        d.lines->push_back(line_from_json(ls[i]));
      } catch (const ParseError& e) {
        fail("lines[" + std::to_string(i) + "]", e.what());
      }
    }
  }
  if (!d.points && !d.lines) fail("dataset", "neither 'points' nor 'lines' present");
  return d;
}

Dataset load_dataset(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError(path + ": cannot open");
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return dataset_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const DistanceStatistics& s) {
  Json hist = Json::array();
  for (const auto& [d, count] : s.histogram) hist.push_back(Json{{"delta", to_json(d)}, {"count", count}});
  return Json{{"distinct_count", s.distinct.size()},
              {"zero_pairs", s.zero_pairs},
              {"quadruple_count", s.quadruple_count},
              {"histogram", std::move(hist)}};
}

std::string to_csv(const DistanceStatistics& s) {
  std::ostringstream out;
  out << "re,im,count\n";
  for (const auto& [d, count] : s.histogram) out << d.re().to_string() << ',' << d.im().to_string() << ',' << count << '\n';
  return out.str();
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (s.back() != 'i') return Rational::parse(s);
  s.pop_back();
  // Split at the last sign that does not start the string.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? Rational(0) : Rational::parse(re), Rational::parse(im)};
}

std::vector<GaussianRational> parse_gaussian_list(std::string_view text) {
  std::vector<GaussianRational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_gaussian(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace cxd
