#include "cxdist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cxdist/esgk.hpp"
#include "cxdist/generators.hpp"
#include "cxdist/io.hpp"
#include "cxdist/report.hpp"
#include "cxdist/verify.hpp"

namespace cxd {
namespace {

struct Common {
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string format = "json";
  std::size_t cap_quadruples = kDefaultQuadrupleCap;
  std::uint64_t cap_triples = kDefaultTripleCap;
  unsigned threads = 1;

  SurfaceOptions surface_options() const {
    SurfaceOptions o;
    o.triple_cap = cap_triples;
    o.threads = threads;
    return o;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IsotropicSign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return IsotropicSign::Plus;
  if (s == "-" || s == "minus") return IsotropicSign::Minus;
  throw UsageError("sign must be + or -, got '" + s + "'");
}

std::string csv_gaussian(const GaussianRational& z) { return z.re().to_string() + "," + z.im().to_string(); }

std::string points_csv(const std::vector<PointC2>& pts) {
  std::ostringstream o;
  o << "x_re,x_im,y_re,y_im\n";
  for (const auto& p : pts) o << csv_gaussian(p.x) << ',' << csv_gaussian(p.y) << '\n';
  return o.str();
}

std::string lines_csv(const std::vector<LineC3>& lines) {
  std::ostringstream o;
  o << "base1_re,base1_im,base2_re,base2_im,base3_re,base3_im,dir1_re,dir1_im,dir2_re,dir2_im,dir3_re,dir3_im\n";
  for (const auto& l : lines) {
    for (int k = 0; k < 3; ++k) o << csv_gaussian(l.base()(k)) << ',';
    for (int k = 0; k < 3; ++k) o << csv_gaussian(l.direction()(k)) << (k < 2 ? "," : "\n");
  }
  return o.str();
}

std::string dataset_csv(const Dataset& d) {
  if (d.points && d.lines) throw UsageError("csv holds either points or lines; use --format json");
  return d.points ? points_csv(*d.points) : lines_csv(*d.lines);
}

std::string key_value_csv(const Json& j) {
  std::ostringstream o;
  o << "key,value\n";
  for (const auto& [k, v] : j.items())
    if (!v.is_structured()) o << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  return o.str();
}

// Lines of a dataset, or L(P) when it holds only points.
std::vector<LineC3> lines_of(const Dataset& d) {
  if (d.lines) return *d.lines;
  return esgk_family(*d.points).lines;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::set<GaussianRational> delta_set(const std::vector<PointC2>& pts) { return distance_statistics(pts).distinct; }

bool inclusions_hold(const std::set<GaussianRational>& direct, const std::set<GaussianRational>& deltas) {
  for (const auto& d : deltas)
    if (!direct.contains(d)) return false;
  for (const auto& v : direct)
    if (!v.is_zero() && !deltas.contains(v)) return false;
  return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact experiments on complex distances and the line configurations they induce"};
  app.name("cxdist");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "random seed")->capture_default_str();
  app.add_option("--out", common.out, "output file, - for standard output")->capture_default_str();
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--cap-quadruples", common.cap_quadruples, "largest |P| for |P|^4 enumerations")->capture_default_str();
  app.add_option("--cap-triples", common.cap_triples, "line triples examined when fitting quadrics")->capture_default_str();
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  // Each command fills json and, when csv is supported, csv; status is its exit code.
  Json json;
  std::string csv;
  int status = kExitOk;
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point or line dataset");
  std::string kind;
  std::size_t k = 3, m = 3, n = 10, planes = 3, per_plane = 20, extra = 40, count = 10;
  std::int64_t bound = 20;
  std::string sign = "+", key = "0", values = "0,1,2", construction = "square";
  gen->add_option("kind", kind, "grid | isotropic | random | random-integer | product | planted-planes | random-lines")
      ->required()
      ->check(CLI::IsMember({"grid", "isotropic", "random", "random-integer", "product", "planted-planes", "random-lines"}));
  gen->add_option("--k", k, "grid side")->capture_default_str();
  gen->add_option("--m", m, "points on the isotropic line")->capture_default_str();
  gen->add_option("--sign", sign, "isotropic slope, + for i or - for -i")->capture_default_str();
  gen->add_option("--key", key, "isotropic intercept")->capture_default_str();
  gen->add_option("--n", n, "number of random points")->capture_default_str();
  gen->add_option("--bound", bound, "coordinate bound for random data")->capture_default_str();
  gen->add_option("--values", values, "comma-separated set A for product")->capture_default_str();
  gen->add_option("--construction", construction, "product construction")
      ->check(CLI::IsMember({"square", "twisted", "sum-difference"}))
      ->capture_default_str();
  gen->add_option("--planes", planes, "planted planes")->capture_default_str();
  gen->add_option("--per-plane", per_plane, "lines per planted plane")->capture_default_str();
  gen->add_option("--extra", extra, "generic lines")->capture_default_str();
  gen->add_option("--count", count, "number of random lines")->capture_default_str();
  gen->callback([&] {
    action = [&] {
      Dataset d;
      if (kind == "grid") d.points = generate_grid(k);
      else if (kind == "isotropic") d.points = generate_isotropic(m, parse_sign(sign), parse_gaussian(key));
      else if (kind == "random") d.points = generate_random(n, bound, common.seed);
      else if (kind == "random-integer") d.points = generate_random_integer(n, bound, common.seed);
      else if (kind == "product") {
        auto a = parse_gaussian_list(values);
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw UsageError("--values repeats an element");
        const auto g = growth_sets(a);
        d.points = construction == "square" ? g.square_grid : construction == "twisted" ? g.twisted_grid : g.sum_difference;
      } else if (kind == "planted-planes") d.lines = generate_planted_planes(planes, per_plane, extra, common.seed).lines;
      else d.lines = generate_random_lines(count, bound, common.seed);
      json = to_json(d);
      csv = dataset_csv(d);
    };
  });

  std::string input;
  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "dataset file, - for standard input")->required(); };

  auto* dist = app.add_subcommand("distances", "distance statistics of a point set");
  add_input(dist);
  dist->callback([&] {
    action = [&] {
      const auto d = load_dataset(input);
      if (!d.points) throw UsageError("distances needs points");
      const auto s = distance_statistics(*d.points, common.threads);
      json = Json{{"points", d.points->size()}};
      json.update(to_json(s));
      csv = to_csv(s);
    };
  });

  auto* es = app.add_subcommand("esgk", "the line family L(P) and its pair counts");
  add_input(es);
  es->callback([&] {
    action = [&] {
      const auto d = load_dataset(input);
      if (!d.points) throw UsageError("esgk needs points");
      const auto fam = esgk_family(*d.points);
      const auto s = esgk_summary(fam, common.threads);
      json = to_json(Dataset{fam.points, fam.lines});
      json["summary"] = Json{{"points", s.n},
                             {"lines", s.line_count},
                             {"quadruple_count", s.quadruple_count},
                             {"parallel_pairs", s.parallel_pairs},
                             {"bad_plane_pairs", s.bad_plane_pairs},
                             {"coplanar_non_bad_pairs", s.coplanar_non_bad_pairs}};
      csv = key_value_csv(json["summary"]);
    };
  });

  std::size_t min_r = 2;
  auto* rich = app.add_subcommand("rich", "points where at least r lines meet");
  add_input(rich);
  rich->add_option("--r", min_r, "smallest richness listed")->capture_default_str()->check(CLI::PositiveNumber);
  rich->callback([&] {
    action = [&] {
      const auto lines = lines_of(load_dataset(input));
      const auto rep = rich_points(lines, common.threads);
      Json by = Json::array(), pts = Json::array();
      std::ostringstream c;
      c << "r,count\n";
      for (const auto& [r, list] : rep.by_richness) {
        by.push_back(Json{{"r", r}, {"count", list.size()}, {"at_least", rep.count_at_least(r)}});
        c << r << ',' << list.size() << '\n';
      }
      for (const auto& [p, idx] : rep.incidences)
        if (idx.size() >= min_r) pts.push_back(Json{{"point", to_json(p)}, {"lines", idx}});
      json = Json{{"lines", lines.size()}, {"max_richness", rep.max_richness}, {"by_richness", by}, {"points", pts}};
      csv = c.str();
    };
  });

  std::size_t threshold = 0;
  auto* surf = app.add_subcommand("surfaces", "planes and quadrics holding at least A lines");
  add_input(surf);
  surf->add_option("--threshold,-A", threshold, "line count A")->required();
  surf->callback([&] {
    action = [&] {
      const auto lines = lines_of(load_dataset(input));
      const auto rep = rich_surfaces(lines, threshold, common.surface_options());
      Json pl = Json::array(), qu = Json::array();
      std::ostringstream c;
      c << "kind,index,lines\n";
      for (std::size_t i = 0; i < rep.planes.size(); ++i) {
        const auto& p = rep.planes[i];
        pl.push_back(Json{{"plane", to_json(p.plane)}, {"bad", is_bad_plane(p.plane).has_value()}, {"lines", p.lines}});
        c << "plane," << i << ',' << p.lines.size() << '\n';
      }
      for (std::size_t i = 0; i < rep.quadrics.size(); ++i) {
        const auto& q = rep.quadrics[i];
        qu.push_back(Json{{"quadric", to_json(q.quadric)}, {"lines", q.lines}});
        c << "quadric," << i << ',' << q.lines.size() << '\n';
      }
      json = Json{{"lines", lines.size()},
                  {"threshold", rep.threshold},
                  {"triples_examined", rep.triples_examined},
                  {"triple_cap_reached", rep.triple_cap_reached},
                  {"planes", pl},
                  {"quadrics", qu}};
      csv = c.str();
    };
  });

  std::size_t r = 2;
  double epsilon = 0.1;
  auto* st = app.add_subcommand("structure", "rich points left over after removing rich planes");
  add_input(st);
  st->add_option("--r", r, "richness r")->capture_default_str();
  st->add_option("--epsilon", epsilon, "exponent slack")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  st->callback([&] {
    action = [&] {
      const auto lines = lines_of(load_dataset(input));
      const auto s = structure_report(lines, r, epsilon, common.surface_options());
      Json pl = Json::array();
      for (const auto& p : s.planes) pl.push_back(Json{{"plane", to_json(p.plane)}, {"lines", p.lines.size()}});
      json = Json{{"lines", s.line_count},        {"r", s.r},
                  {"r_prime", s.r_prime},         {"epsilon", std::stod(format_double(s.epsilon))},
                  {"threshold", s.threshold},     {"rich", s.rich_count},
                  {"residual", s.residual},       {"reference", std::stod(format_double(s.reference))},
                  {"ratio", std::stod(format_double(s.ratio))}, {"planes", pl}};
      csv = key_value_csv(json);
    };
  });

  std::string sp_values;
  std::size_t sp_random = 0;
  auto* sp = app.add_subcommand("sumprod", "sum, difference and product growth sets of A");
  sp->add_option("--values", sp_values, "comma-separated set A");
  sp->add_option("--random", sp_random, "draw A of this size instead");
  sp->add_option("--bound", bound, "bound for random elements")->capture_default_str();
  sp->callback([&] {
    action = [&] {
      std::vector<GaussianRational> a;
      if (sp_random > 0) {
        Rng rng = Rng(common.seed).substream(5);
        std::set<GaussianRational> s;
        for (std::size_t tries = 0; s.size() < sp_random; ++tries) {
          if (tries > 100 * sp_random + 1000) throw UsageError("--bound too small for --random");
          s.insert(rng.gaussian(bound));
        }
        a.assign(s.begin(), s.end());
      } else {
        if (sp_values.empty()) throw UsageError("sumprod needs --values or --random");
        a = parse_gaussian_list(sp_values);
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw UsageError("--values repeats an element");
      }
      const auto g = growth_sets(a);
      std::set<GaussianRational> scaled;
      for (const auto& v : g.product) scaled.insert(GaussianRational(4) * v);
      const bool plus_ok = inclusions_hold(g.plus, delta_set(g.square_grid));
      const bool minus_ok = inclusions_hold(g.minus, delta_set(g.twisted_grid));
      const bool product_ok = inclusions_hold(scaled, delta_set(g.sum_difference));
      Json av = Json::array();
      for (const auto& v : a) av.push_back(to_json(v));
      json = Json{{"values", av},
                  {"size", a.size()},
                  {"plus", g.plus.size()},
                  {"minus", g.minus.size()},
                  {"product", g.product.size()},
                  {"plus_matches_square_grid", plus_ok},
                  {"minus_matches_twisted_grid", minus_ok},
                  {"product_matches_sum_difference", product_ok}};
      csv = key_value_csv(json);
      if (!(plus_ok && minus_ok && product_ok)) status = kExitViolation;
    };
  });

  std::string suites;
  auto* ver = app.add_subcommand("verify", "check every invariant the dataset supports");
  add_input(ver);
  ver->add_option("--suite", suites, "comma-separated subset of points,esgk,lines");
  ver->callback([&] {
    action = [&] {
      VerifyOptions o;
      o.suites = split_list(suites);
      o.quadruple_cap = common.cap_quadruples;
      o.triple_cap = common.cap_triples;
      o.threads = common.threads;
      const auto rep = run_verify(load_dataset(input), o);
      json = rep.to_json();
      std::ostringstream c;
      c << "suite,check,status,cases\n";
      for (const auto& ch : rep.checks) c << ch.suite << ',' << ch.name << ',' << to_string(ch.status) << ',' << ch.cases << '\n';
      csv = c.str();
      if (!rep.passed()) status = kExitViolation;
    };
  });

  ReportOptions ro;
  std::string tables;
  auto* rp = app.add_subcommand("report", "bound-comparison tables");
  rp->add_option("--table", tables, "comma-separated subset of grids,rich,two_rich,structure,isotropic");
  rp->add_option("--grid-max", ro.grid_max, "largest grid side")->capture_default_str();
  rp->add_option("--random-max", ro.random_max, "largest random point set")->capture_default_str();
  rp->add_option("--bound", ro.bound, "coordinate bound for random points")->capture_default_str();
  rp->add_option("--isotropic-max", ro.isotropic_max, "largest isotropic point set")->capture_default_str();
  rp->callback([&] {
    action = [&] {
      ro.tables = split_list(tables);
      ro.seed = common.seed;
      ro.triple_cap = common.cap_triples;
      ro.threads = common.threads;
      const auto t = run_report(ro);
      json = to_json(t);
      csv = to_csv(t);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    err << "cxdist: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "cxdist: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "cxdist: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "cxdist: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string text = common.format == "csv" ? csv : dump(json);
  if (common.out == "-") {
    out << text;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f || !(f << text)) {
      err << "cxdist: cannot write " << common.out << '\n';
      return kExitUsage;
    }
  }
  if (status == kExitViolation) err << "cxdist: invariant violated\n";
  return status;
}

}  // namespace cxd
