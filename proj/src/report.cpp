#include "cxdist/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cxdist/esgk.hpp"
#include "cxdist/generators.hpp"

namespace cxd {
namespace {

Table grids(const ReportOptions& o) {
  Table t{"grids", {"k", "n", "distinct", "n^0.9", "ratio"}, {}};
  for (std::size_t k = 3; k <= o.grid_max; ++k) {
    const auto pts = generate_grid(k);
    const auto stats = distance_statistics(pts, o.threads);
    const double n = static_cast<double>(pts.size()), ref = std::pow(n, 0.9);
    t.rows.push_back({k, pts.size(), stats.distinct.size(), ref, static_cast<double>(stats.distinct.size()) / ref});
  }
  return t;
}

std::vector<std::size_t> random_sizes(const ReportOptions& o) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 4; n <= o.random_max; n += 4) sizes.push_back(n);
  return sizes;
}

// One point set per size; the seed stream is the size so tables agree with each other.
std::vector<PointC2> random_points(const ReportOptions& o, std::size_t n) { return generate_random_integer(n, o.bound, mix_seed(o.seed, n)); }

Table rich(const ReportOptions& o) {
  Table t{"rich", {"points", "lines", "r", "rich", "n^2/r^3+n/r", "ratio"}, {}};
  for (auto size : random_sizes(o)) {
    const auto fam = esgk_family(random_points(o, size));
    const auto report = rich_points(fam.lines, o.threads);
    const double m = static_cast<double>(fam.lines.size());
    for (std::size_t r = 2; static_cast<double>(r) <= 2 * std::sqrt(m); r *= 2) {
      const double rr = static_cast<double>(r), ref = m * m / (rr * rr * rr) + m / rr;
      const auto count = report.count_at_least(r);
      t.rows.push_back({size, fam.lines.size(), r, count, ref, static_cast<double>(count) / ref});
    }
  }
  return t;
}

Table two_rich(const ReportOptions& o) {
  Table t{"two_rich", {"points", "lines", "rich", "n^1.5", "ratio"}, {}};
  for (auto size : random_sizes(o)) {
    const auto fam = esgk_family(random_points(o, size));
    const auto count = rich_points(fam.lines, o.threads).count_at_least(2);
    const double ref = std::pow(static_cast<double>(fam.lines.size()), 1.5);
    t.rows.push_back({size, fam.lines.size(), count, ref, static_cast<double>(count) / ref});
  }
  return t;
}

Table structure(const ReportOptions& o) {
  Table t{"structure",
          {"config", "lines", "r", "epsilon", "threshold", "planes", "rich", "residual", "n^(1.5+eps)/r^2", "ratio"},
          {}};
  SurfaceOptions so;
  so.threads = o.threads;
  so.triple_cap = o.triple_cap;
  auto add = [&](const std::string& name, const std::vector<LineC3>& lines) {
    for (std::size_t r : {2, 3})
      for (double eps : {0.0, 0.1}) {
        const auto s = structure_report(lines, r, eps, so);
        t.rows.push_back({name, s.line_count, r, eps, s.threshold, s.planes.size(), s.rich_count, s.residual, s.reference, s.ratio});
      }
  };
  add("planted-3x20+40", generate_planted_planes(3, 20, 40, o.seed).lines);
  add("esgk-random-" + std::to_string(o.random_max), esgk_family(random_points(o, o.random_max)).lines);
  add("esgk-grid-3", esgk_family(generate_grid(3)).lines);
  return t;
}

Table isotropic(const ReportOptions& o) {
  Table t{"isotropic", {"m", "distinct", "zero_pairs"}, {}};
  for (std::size_t m = 2; m <= o.isotropic_max; ++m) {
    const auto stats = distance_statistics(generate_isotropic(m, IsotropicSign::Plus, GaussianRational(0)), o.threads);
    t.rows.push_back({m, stats.distinct.size(), stats.zero_pairs});
  }
  return t;
}

std::string cell(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const std::vector<std::string>& report_tables() {
  static const std::vector<std::string> names{"grids", "rich", "two_rich", "structure", "isotropic"};
  return names;
}

std::vector<Table> run_report(const ReportOptions& options) {
  const auto& names = options.tables.empty() ? report_tables() : options.tables;
  std::vector<Table> out;
  for (const auto& name : names) {
    if (name == "grids") out.push_back(grids(options));
    else if (name == "rich") out.push_back(rich(options));
    else if (name == "two_rich") out.push_back(two_rich(options));
    else if (name == "structure") out.push_back(structure(options));
    else if (name == "isotropic") out.push_back(isotropic(options));
    else throw std::invalid_argument("unknown report table '" + name + "'");
  }
  return out;
}

Json to_json(const std::vector<Table>& tables) {
  Json out = Json::object();
  for (const auto& t : tables) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json row = Json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        row[t.columns[c]] = r[c].is_number_float() ? Json(std::stod(format_double(r[c].get<double>()))) : r[c];
      rows.push_back(std::move(row));
    }
    out[t.name] = std::move(rows);
  }
  return out;
}

std::string to_csv(const std::vector<Table>& tables) {
  std::ostringstream out;
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    if (k) out << '\n';
    out << "# " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << cell(r[c]);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace cxd
