#include "cxdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "cxdist/esgk.hpp"
#include "cxdist/parallel.hpp"

namespace cxd {
namespace {

class Suite {
 public:
  Suite(VerifyReport& report, std::string name) : report_(report), name_(std::move(name)) {}

  CheckResult& add(std::string check) {
    report_.checks.push_back({name_, std::move(check), CheckStatus::Pass, 0, {}, nullptr});
    return report_.checks.back();
  }

  void skip(std::string check, std::string why) {
    auto& c = add(std::move(check));
    c.status = CheckStatus::Skipped;
    c.note = std::move(why);
  }

 private:
  VerifyReport& report_;
  std::string name_;
};

void fail(CheckResult& c, std::string note, Json witness) {
  c.status = CheckStatus::Fail;
  c.note = std::move(note);
  c.witness = std::move(witness);
}

Json indexed_point(std::size_t i, const PointC2& p) { return Json{{"index", i}, {"point", to_json(p)}}; }

std::optional<std::pair<std::size_t, std::size_t>> first_repeat_points(std::span<const PointC2> pts) {
  std::map<PointC2, std::size_t> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [it, fresh] = seen.emplace(pts[i], i);
    if (!fresh) return std::pair{it->second, i};
  }
  return std::nullopt;
}

void points_suite(VerifyReport& report, std::span<const PointC2> pts, const VerifyOptions& opt) {
  Suite suite(report, "points");
  const std::size_t n = pts.size();
  {
    auto& c = suite.add("distinct");
    c.cases = n;
    if (auto rep = first_repeat_points(pts)) {
      fail(c, "repeated point", Json{{"first", indexed_point(rep->first, pts[rep->first])}, {"second", rep->second}});
      return;
    }
  }
  const auto stats = distance_statistics(pts, opt.threads);
  {
    auto& c = suite.add("histogram_total");
    std::uint64_t total = stats.zero_pairs;
    for (const auto& [d, k] : stats.histogram) total += k;
    c.cases = 1;
    if (total != static_cast<std::uint64_t>(n) * (n ? n - 1 : 0))
      fail(c, "histogram does not account for every ordered pair", Json{{"counted", total}, {"expected", n * (n ? n - 1 : 0)}});
  }
  {
    auto& c = suite.add("delta_zero_iff_isotropic");
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < n && !bad; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        ++c.cases;
        const bool zero = delta(pts[i], pts[j]).is_zero();
        const bool iso = isotropic_key(pts[i], IsotropicSign::Plus) == isotropic_key(pts[j], IsotropicSign::Plus) ||
                         isotropic_key(pts[i], IsotropicSign::Minus) == isotropic_key(pts[j], IsotropicSign::Minus);
        if (zero != iso || !(delta(pts[i], pts[j]) == delta(pts[j], pts[i]))) {
          bad = std::pair{i, j};
          break;
        }
      }
    if (bad)
      fail(c, "delta vanishes off the isotropic lines or is not symmetric",
           Json{{"p", indexed_point(bad->first, pts[bad->first])},
                {"q", indexed_point(bad->second, pts[bad->second])},
                {"delta", to_json(delta(pts[bad->first], pts[bad->second]))}});
  }
  if (n > opt.quadruple_cap) {
    suite.skip("quadruple_identity", "|P| = " + std::to_string(n) + " exceeds the quadruple cap " + std::to_string(opt.quadruple_cap));
    return;
  }
  auto& c = suite.add("quadruple_identity");
  c.cases = static_cast<std::uint64_t>(n) * n * n * n;
  const auto brute = quadruples_bruteforce(pts, opt.quadruple_cap);
  if (brute != stats.quadruple_count)
    fail(c, "histogram and enumeration disagree", Json{{"histogram", stats.quadruple_count}, {"enumeration", brute}});
}

void esgk_suite(VerifyReport& report, std::span<const PointC2> pts, const std::optional<std::vector<LineC3>>& given,
                const VerifyOptions& opt) {
  Suite suite(report, "esgk");
  const std::size_t n = pts.size();
  if (first_repeat_points(pts)) {
    suite.skip("family", "points repeat");
    return;
  }
  EsgkFamily fam = esgk_family(pts);
  if (given) {
    auto& c = suite.add("line_count");
    c.cases = 1;
    if (given->size() != n * n) {
      fail(c, "expected one line per ordered pair", Json{{"lines", given->size()}, {"expected", n * n}});
      return;
    }
    fam.lines = *given;
  }
  const std::size_t m = fam.lines.size();
  auto pair_of = [&](std::size_t line) { return fam.source[line]; };

  if (n > opt.quadruple_cap) {
    for (const char* name : {"coplanar_iff_equal_delta", "parallel_iff_equal_difference", "parallel_count", "quadruples_vs_planes"})
      suite.skip(name, "|P| = " + std::to_string(n) + " exceeds the quadruple cap " + std::to_string(opt.quadruple_cap));
  } else {
    // Every unordered pair of lines once; row i of the upper triangle per index.
    struct Row {
      std::uint64_t parallel = 0, non_bad = 0;
      std::optional<std::size_t> coplanar_bad, parallel_bad;
    };
    std::vector<Row> rows(m);
    parallel_shards(m, opt.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto [a, c] = pair_of(i);
        for (std::size_t j = i + 1; j < m; ++j) {
          const auto [b, d] = pair_of(j);
          const auto rel = line_pair_relation(fam.lines[i], fam.lines[j]);
          const bool coplanar = rel.coplanar();
          if (coplanar != (delta(pts[a], pts[b]) == delta(pts[c], pts[d])) && !rows[i].coplanar_bad) rows[i].coplanar_bad = j;
          const bool parallel = rel.kind == LineRelation::Parallel;
          const bool diff = pts[a].x - pts[c].x == pts[b].x - pts[d].x && pts[a].y - pts[c].y == pts[b].y - pts[d].y;
          if (parallel != diff && !rows[i].parallel_bad) rows[i].parallel_bad = j;
          rows[i].parallel += parallel;
          if (coplanar && rel.kind != LineRelation::Equal && !is_bad_plane(*rel.plane)) ++rows[i].non_bad;
        }
      }
    });
    auto quadruple = [&](std::size_t i, std::size_t j) {
      const auto [a, c] = pair_of(i);
      const auto [b, d] = pair_of(j);
      return Json{{"a", indexed_point(a, pts[a])},
                  {"b", indexed_point(b, pts[b])},
                  {"c", indexed_point(c, pts[c])},
                  {"d", indexed_point(d, pts[d])},
                  {"delta_ab", to_json(delta(pts[a], pts[b]))},
                  {"delta_cd", to_json(delta(pts[c], pts[d]))},
                  {"line_ac", to_json(fam.lines[i])},
                  {"line_bd", to_json(fam.lines[j])},
                  {"relation", to_string(line_pair_relation(fam.lines[i], fam.lines[j]).kind)}};
    };
    const std::uint64_t pairs = static_cast<std::uint64_t>(m) * (m ? m - 1 : 0) / 2;
    std::uint64_t parallel = 0, non_bad = 0;
    for (const auto& r : rows) {
      parallel += r.parallel;
      non_bad += r.non_bad;
    }
    {
      auto& c = suite.add("coplanar_iff_equal_delta");
      c.cases = pairs;
      for (std::size_t i = 0; i < m; ++i)
        if (rows[i].coplanar_bad) {
          fail(c, "coplanarity of l_ac, l_bd disagrees with delta(a,b) = delta(c,d)", quadruple(i, *rows[i].coplanar_bad));
          break;
        }
    }
    {
      auto& c = suite.add("parallel_iff_equal_difference");
      c.cases = pairs;
      for (std::size_t i = 0; i < m; ++i)
        if (rows[i].parallel_bad) {
          fail(c, "l_ac parallel to l_bd disagrees with a - c = b - d", quadruple(i, *rows[i].parallel_bad));
          break;
        }
    }
    {
      auto& c = suite.add("parallel_count");
      c.cases = 1;
      const std::uint64_t hist = parallel_pair_count(fam);
      const std::uint64_t cube = static_cast<std::uint64_t>(n) * n * n;
      if (hist != 2 * parallel || hist > cube)
        fail(c, "histogram count differs from the pairwise count or exceeds |P|^3",
             Json{{"histogram", hist}, {"pairwise", 2 * parallel}, {"cube", cube}});
    }
    {
      auto& c = suite.add("quadruples_vs_planes");
      c.cases = 1;
      const std::uint64_t q = distance_statistics(pts, opt.threads).quadruple_count;
      if (q > 2 * non_bad)
        fail(c, "more quadruples than ordered line pairs in non-bad planes", Json{{"quadruples", q}, {"pairs", 2 * non_bad}});
    }
  }

  {
    // A line of the family lies in a bad plane over an isotropic line exactly
    // when both of its points do.
    auto& c = suite.add("bad_plane_iff_isotropic");
    for (std::size_t i = 0; i < m && c.status == CheckStatus::Pass; ++i) {
      const auto [a, cc] = pair_of(i);
      for (auto sign : {IsotropicSign::Plus, IsotropicSign::Minus})
        for (std::size_t end : {a, cc}) {
          ++c.cases;
          const GaussianRational key = isotropic_key(pts[end], sign);
          const bool contained = bad_plane(sign, key).contains(fam.lines[i]);
          const bool both = isotropic_key(pts[a], sign) == key && isotropic_key(pts[cc], sign) == key;
          if (contained != both && c.status == CheckStatus::Pass)
            fail(c, "containment in the bad plane disagrees with both points on the isotropic line",
                 Json{{"a", indexed_point(a, pts[a])},
                      {"c", indexed_point(cc, pts[cc])},
                      {"line", to_json(fam.lines[i])},
                      {"sign", sign == IsotropicSign::Plus ? "+" : "-"},
                      {"key", to_json(key)},
                      {"contained", contained}});
        }
    }
  }

  {
    auto& c = suite.add("lines_distinct");
    c.cases = m;
    std::map<LineC3, std::size_t> seen;
    for (std::size_t i = 0; i < m; ++i) {
      auto [it, fresh] = seen.emplace(fam.lines[i], i);
      if (!fresh) {
        const auto [a, cc] = pair_of(it->second);
        const auto [b, d] = pair_of(i);
        fail(c, "two pairs give the same line",
             Json{{"first", Json{{"a", a}, {"c", cc}}}, {"second", Json{{"a", b}, {"c", d}}}, {"line", to_json(fam.lines[i])}});
        suite.skip("richness_caps", "lines repeat");
        return;
      }
    }
  }
  {
    auto& c = suite.add("richness_caps");
    const auto points = rich_points(fam.lines, opt.threads);
    c.cases = points.incidences.size();
    if (points.max_richness > n) {
      for (const auto& [p, idx] : points.incidences)
        if (idx.size() > n) {
          fail(c, "a point lies on more than |P| lines", Json{{"point", to_json(p)}, {"lines", idx.size()}, {"n", n}});
          break;
        }
    }
    if (c.status == CheckStatus::Pass && n > 0) {
      // Anything over a cap holds at least 2n + 1 lines.
      const auto iso = isotropic_classify(pts);
      const bool avoids_origin_lines = !iso.plus.contains(GaussianRational(0)) && !iso.minus.contains(GaussianRational(0));
      SurfaceOptions so;
      so.triple_cap = opt.triple_cap;
      so.threads = opt.threads;
      const auto surfaces = rich_surfaces(fam.lines, 2 * n + 1, so);
      c.cases += surfaces.planes.size() + surfaces.quadrics.size();
      if (avoids_origin_lines)
        for (const auto& pl : surfaces.planes)
          if (!is_bad_plane(pl.plane)) {
            fail(c, "a non-bad plane holds more than 2|P| lines", Json{{"plane", to_json(pl.plane)}, {"lines", pl.lines.size()}, {"n", n}});
            break;
          }
      for (const auto& q : surfaces.quadrics)
        if (q.lines.size() > 6 * n && c.status == CheckStatus::Pass)
          fail(c, "a quadric holds more than 6|P| lines", Json{{"quadric", to_json(q.quadric)}, {"lines", q.lines.size()}, {"n", n}});
    }
  }
}

void lines_suite(VerifyReport& report, std::span<const LineC3> lines, const VerifyOptions& opt) {
  Suite suite(report, "lines");
  const std::size_t m = lines.size();
  {
    auto& c = suite.add("distinct");
    c.cases = m;
    std::map<LineC3, std::size_t> seen;
    for (std::size_t i = 0; i < m; ++i) {
      auto [it, fresh] = seen.emplace(lines[i], i);
      if (!fresh) {
        fail(c, "repeated line", Json{{"first", it->second}, {"second", i}, {"line", to_json(lines[i])}});
        return;
      }
    }
  }
  const auto points = rich_points(lines, opt.threads);
  {
    auto& c = suite.add("rich_point_incidences");
    for (const auto& [p, idx] : points.incidences) {
      ++c.cases;
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < m; ++k)
        if (lines[k].contains(p)) on.push_back(k);
      if (on != idx) {
        fail(c, "reported incidences differ from a scan of every line",
             Json{{"point", to_json(p)}, {"reported", idx}, {"scanned", on}});
        break;
      }
    }
  }
  const double dm = static_cast<double>(m);
  {
    auto& c = suite.add("rich_point_count_bound");
    for (std::size_t r = 2; r <= 2 * m + 1; ++r) {
      if (static_cast<double>(r) < 2 * std::sqrt(dm)) continue;
      ++c.cases;
      const std::size_t count = points.count_at_least(r);
      if (static_cast<double>(count) > 2 * dm / static_cast<double>(r)) {
        fail(c, "more r-rich points than 2n/r", Json{{"r", r}, {"rich_points", count}, {"n", m}});
        break;
      }
    }
  }
  if (m < 3) return;
  SurfaceOptions so;
  so.triple_cap = opt.triple_cap;
  so.threads = opt.threads;
  {
    auto& c = suite.add("rich_surface_count_bound");
    const auto a_plane = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(2 * std::sqrt(dm))));
    const auto a_quad = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(8 * std::sqrt(dm))));
    const auto planes = rich_surfaces(lines, a_plane, [&] {
      auto o = so;
      o.quadrics = false;
      return o;
    }());
    c.cases = 2;
    if (static_cast<double>(planes.planes.size()) > 2 * dm / static_cast<double>(a_plane))
      fail(c, "more rich planes than 2n/A", Json{{"A", a_plane}, {"planes", planes.planes.size()}, {"n", m}});
    if (c.status == CheckStatus::Pass && a_quad <= m) {
      const auto both = rich_surfaces(lines, a_quad, so);
      const auto s = both.planes.size() + both.quadrics.size();
      if (static_cast<double>(s) > 2 * dm / static_cast<double>(a_quad))
        fail(c, "more rich surfaces than 2n/A", Json{{"A", a_quad}, {"surfaces", s}, {"n", m}});
    }
  }
  {
    auto& c = suite.add("surface_lines_exact");
    const auto surfaces = rich_surfaces(lines, std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(2 * std::sqrt(dm)))), so);
    for (const auto& pl : surfaces.planes) {
      ++c.cases;
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < m; ++k)
        if (pl.plane.contains(lines[k])) on.push_back(k);
      if (on != pl.lines) {
        fail(c, "plane line list differs from a scan", Json{{"plane", to_json(pl.plane)}, {"reported", pl.lines}, {"scanned", on}});
        return;
      }
    }
    for (const auto& q : surfaces.quadrics) {
      ++c.cases;
      std::vector<std::size_t> on;
      for (std::size_t k = 0; k < m; ++k)
        if (line_in_quadric(lines[k], q.quadric)) on.push_back(k);
      if (on != q.lines) {
        fail(c, "quadric line list differs from a scan", Json{{"quadric", to_json(q.quadric)}, {"reported", q.lines}, {"scanned", on}});
        return;
      }
    }
  }
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j{{"suite", c.suite}, {"check", c.name}, {"status", to_string(c.status)}, {"cases", c.cases}};
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.witness.is_null()) j["witness"] = c.witness;
    list.push_back(std::move(j));
  }
  return Json{{"passed", passed()}, {"checks", std::move(list)}};
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"points", "esgk", "lines"};
  return names;
}

VerifyReport run_verify(const Dataset& data, const VerifyOptions& options) {
  std::vector<std::string> suites = options.suites;
  if (suites.empty()) {
    if (data.points) suites.insert(suites.end(), {"points", "esgk"});
    if (data.lines) suites.emplace_back("lines");
  }
  VerifyReport report;
  for (const auto& s : suites) {
    if (s == "points" || s == "esgk") {
      if (!data.points) throw std::invalid_argument("suite '" + s + "' needs points in the dataset");
      if (s == "points") points_suite(report, *data.points, options);
      else esgk_suite(report, *data.points, data.lines, options);
    } else if (s == "lines") {
      if (!data.lines) throw std::invalid_argument("suite 'lines' needs lines in the dataset");
      lines_suite(report, *data.lines, options);
    } else {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  return report;
}

}  // namespace cxd
