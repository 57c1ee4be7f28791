#include "cxdist/incidence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "cxdist/modular.hpp"
#include "cxdist/parallel.hpp"

namespace cxd {
namespace {

std::uint64_t choose2(std::uint64_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }
std::uint64_t choose3(std::uint64_t a) { return a < 3 ? 0 : a * (a - 1) * (a - 2) / 6; }

// Position of (i, j, k), i < j < k < m, in the lexicographic list of all triples.
std::uint64_t triple_rank(std::uint64_t m, std::uint64_t i, std::uint64_t j, std::uint64_t k) {
  return choose3(m) - choose3(m - i) + choose2(m - i - 1) - choose2(m - j) + (k - j - 1);
}

// Coplanarity of every pair, row-major.
std::vector<char> coplanarity_table(std::span<const LineC3> lines, unsigned threads) {
  const std::size_t m = lines.size();
  std::vector<char> table(m * m, 0);
  parallel_shards(m, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < m; ++j) table[i * m + j] = lines_coplanar(lines[i], lines[j]) ? 1 : 0;
  });
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) table[i * m + j] = table[j * m + i];
  return table;
}

std::size_t ceil_half(std::size_t a) { return (a + 1) / 2; }

using Restriction = Eigen::Matrix<GaussianRational, 3, 10>;
using ModKey = std::array<std::uint64_t, 10>;
using Triple = std::array<std::size_t, 3>;

// Quadric discovery for one skew pair at a time. The search runs modulo a
// large prime first: a kernel of dimension one mod p forces dimension one over
// Q(i), and equal exact quadrics reduce to equal keys, so grouping mod p never
// loses a group. Any rank drop mod p sends the pair to the exact path.
struct QuadricSearch {
  std::span<const LineC3> lines;
  std::function<bool(std::size_t, std::size_t)> coplanar;
  std::size_t need;
  std::size_t threshold;
  std::vector<Restriction> exact;
  std::optional<PrimeField> field;
  std::vector<ModMatrix> reduced;

  void reduce() {
    for (auto p : kFieldPrimes) {
      PrimeField f(p);
      std::vector<ModMatrix> out;
      out.reserve(exact.size());
      bool ok = true;
      for (const auto& r : exact) {
        ModMatrix mm(3, 10);
        for (std::size_t a = 0; a < 3 && ok; ++a)
          for (std::size_t b = 0; b < 10 && ok; ++b) {
            const auto v = f.reduce(r(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
            if (!v) ok = false;
            else mm(a, b) = *v;
          }
        if (!ok) break;
        out.push_back(std::move(mm));
      }
      if (ok) {
        field = f;
        reduced = std::move(out);
        return;
      }
    }
  }

  bool admissible(std::size_t i, std::size_t j, std::size_t k) const { return !coplanar(i, k) && !coplanar(j, k); }

  // Whether at least `threshold` lines kill `key` mod p. Those lines are a
  // superset of the lines on any exact quadric reducing to `key`.
  bool mod_count_reaches(const ModKey& key) const {
    std::size_t count = 0, left = reduced.size();
    for (const auto& r : reduced) {
      if (count >= threshold) return true;
      if (count + left < threshold) return false;
      count += mod_contains(r, key) ? 1 : 0;
      --left;
    }
    return count >= threshold;
  }

  bool mod_contains(const ModMatrix& r, const ModKey& key) const {
    const PrimeField& f = *field;
    for (std::size_t a = 0; a < 3; ++a)
      if (f.dot(&r.a[a * 10], key.data(), 10) != 0) return false;
    return true;
  }

  bool modular_pair(std::size_t i, std::size_t j, std::size_t k_end, std::map<ModKey, std::vector<Triple>>& out) const {
    if (!field) return false;
    const PrimeField& f = *field;
    ModMatrix pair(6, 10);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 10; ++b) {
        pair(a, b) = reduced[i](a, b);
        pair(a + 3, b) = reduced[j](a, b);
      }
    const auto basis = nullspace_mod(f, pair);
    if (basis.size() != 4) return false;
    std::uint64_t basisT[40];
    for (std::size_t c = 0; c < 10; ++c)
      for (std::size_t b = 0; b < 4; ++b) basisT[c * 4 + b] = basis[b][c];

    std::map<ModKey, std::vector<std::size_t>> groups;
    std::uint64_t cut[3][4];
    for (std::size_t k = j + 1; k < k_end; ++k) {
      if (!admissible(i, j, k)) continue;
      const ModMatrix& rk = reduced[k];
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 4; ++b) cut[a][b] = f.dot(&rk.a[a * 10], basis[b].data(), 10);
      // The kernel of a rank-3 map F^4 -> F^3 is spanned by its signed maximal minors.
      std::uint64_t ker[4];
      bool nonzero = false;
      for (std::size_t b = 0; b < 4; ++b) {
        std::size_t c[3], w = 0;
        for (std::size_t t = 0; t < 4; ++t)
          if (t != b) c[w++] = t;
        auto m = [&](std::size_t r, std::size_t col) { return cut[r][c[col]]; };
        const std::uint64_t pos = f.add(f.add(f.mul(m(0, 0), f.mul(m(1, 1), m(2, 2))), f.mul(m(0, 1), f.mul(m(1, 2), m(2, 0)))),
                                        f.mul(m(0, 2), f.mul(m(1, 0), m(2, 1))));
        const std::uint64_t neg = f.add(f.add(f.mul(m(0, 2), f.mul(m(1, 1), m(2, 0))), f.mul(m(0, 0), f.mul(m(1, 2), m(2, 1)))),
                                        f.mul(m(0, 1), f.mul(m(1, 0), m(2, 2))));
        const std::uint64_t det = f.sub(pos, neg);
        ker[b] = (b & 1) ? f.neg(det) : det;
        nonzero = nonzero || det != 0;
      }
      if (!nonzero) return false;
      ModKey key;
      for (std::size_t c = 0; c < 10; ++c) key[c] = f.dot(ker, &basisT[c * 4], 4);
      std::size_t lead = 0;
      while (lead < 10 && key[lead] == 0) ++lead;
      const std::uint64_t inv = f.inv(key[lead]);
      for (auto& v : key) v = f.mul(v, inv);
      groups[key].push_back(k);
    }
    for (const auto& [key, members] : groups) {
      if (members.size() + 2 < need || !mod_count_reaches(key)) continue;
      auto& reps = out[key];
      for (auto k : members) reps.push_back({i, j, k});
    }
    return true;
  }

  void exact_pair(std::size_t i, std::size_t j, std::size_t k_end, std::set<QuadricC3>& out) const {
    Matrix pair(6, 10);
    pair.topRows(3) = exact[i];
    pair.bottomRows(3) = exact[j];
    const auto basis_vecs = nullspace(pair);
    Matrix basis(10, static_cast<Eigen::Index>(basis_vecs.size()));
    for (std::size_t b = 0; b < basis_vecs.size(); ++b) basis.col(static_cast<Eigen::Index>(b)) = basis_vecs[b];

    std::map<QuadricC3, std::size_t> groups;
    for (std::size_t k = j + 1; k < k_end; ++k) {
      if (!admissible(i, j, k)) continue;
      const auto ker = nullspace(multiply(exact[k], basis));
      if (ker.size() != 1) continue;
      ++groups[QuadricC3::from_vector(multiply(basis, ker.front()))];
    }
    for (const auto& [q, size] : groups)
      if (size + 2 >= need) out.insert(q);
  }
};

}  // namespace

std::size_t RichPointReport::count_at_least(std::size_t r) const {
  std::size_t total = 0;
  for (auto it = by_richness.lower_bound(r); it != by_richness.end(); ++it) total += it->second.size();
  return total;
}

std::vector<PointC3> RichPointReport::at_least(std::size_t r) const {
  std::vector<PointC3> out;
  for (const auto& [p, idx] : incidences)
    if (idx.size() >= r) out.push_back(p);
  return out;
}

void require_distinct(std::span<const LineC3> lines) {
  std::set<LineC3> seen;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!seen.insert(lines[i]).second)
      throw std::invalid_argument("duplicate line at index " + std::to_string(i) + ": " + lines[i].to_string());
}

RichPointReport rich_points(std::span<const LineC3> lines, unsigned threads) {
  require_distinct(lines);
  const std::size_t m = lines.size();
  using IncidenceMap = std::map<PointC3, std::set<std::size_t>, LexLess>;
  std::vector<IncidenceMap> shards(shard_count(m, threads));
  parallel_shards(m, threads, [&](std::size_t s, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (lines[i].direction() == lines[j].direction() || !lines_coplanar(lines[i], lines[j])) continue;
        auto rel = line_pair_relation(lines[i], lines[j]);
        auto& set = shards[s][*rel.point];
        set.insert(i);
        set.insert(j);
      }
  });

  IncidenceMap merged;
  for (auto& sh : shards)
    for (auto& [p, idx] : sh) merged[p].insert(idx.begin(), idx.end());

  RichPointReport report;
  for (auto& [p, idx] : merged) {
    const std::size_t r = idx.size();
    report.by_richness[r].push_back(p);
    report.max_richness = std::max(report.max_richness, r);
    report.incidences.emplace(p, std::vector<std::size_t>(idx.begin(), idx.end()));
  }
  return report;
}

RichSurfaceReport rich_surfaces(std::span<const LineC3> lines, std::size_t threshold, const SurfaceOptions& options) {
  if (threshold < 2) throw std::invalid_argument("rich_surfaces: threshold must be at least 2");
  require_distinct(lines);
  const std::size_t m = lines.size();
  const unsigned threads = options.threads;
  const auto coplanar = coplanarity_table(lines, threads);
  auto is_coplanar = [&](std::size_t i, std::size_t j) { return coplanar[i * m + j] != 0; };

  RichSurfaceReport report;
  report.threshold = threshold;

  // Planes: every plane holding two or more lines is spanned by one of its pairs.
  {
    std::vector<std::map<PlaneC3, std::set<std::size_t>>> shards(shard_count(m, threads));
    parallel_shards(m, threads, [&](std::size_t s, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          if (!is_coplanar(i, j)) continue;
          auto rel = line_pair_relation(lines[i], lines[j]);
          auto& set = shards[s][*rel.plane];
          set.insert(i);
          set.insert(j);
        }
    });
    std::map<PlaneC3, std::set<std::size_t>> merged;
    for (auto& sh : shards)
      for (auto& [pl, idx] : sh) merged[pl].insert(idx.begin(), idx.end());
    for (const auto& [pl, idx] : merged) {
      if (idx.size() < threshold) continue;
      RichPlane rp{pl, {}};
      for (std::size_t k = 0; k < m; ++k)
        if (pl.contains(lines[k])) rp.lines.push_back(k);
      if (rp.lines.size() >= threshold) report.planes.push_back(std::move(rp));
    }
  }

  if (!options.quadrics || m < 3) return report;

  // Quadrics. For a skew pair (i, j) the quadrics through both form a
  // 4-dimensional space; each later line k skew to both cuts it down to the
  // unique quadric through the three. Lines of one ruling are pairwise skew, so
  // a quadric holding `threshold` lines has a ruling of at least
  // ceil(threshold/2) lines, all of which land in the same group when (i, j)
  // are that ruling's two lowest indices.
  const std::uint64_t total = choose3(m);
  const std::uint64_t cap = options.triple_cap;
  report.triples_examined = std::min(total, cap);
  report.triple_cap_reached = total > cap;

  QuadricSearch search{lines, is_coplanar, std::max<std::size_t>(1, ceil_half(threshold)), threshold, {}, std::nullopt, {}};
  search.exact.resize(m);
  for (std::size_t k = 0; k < m; ++k) search.exact[k] = quadric_restriction(lines[k]);
  search.reduce();

  const std::size_t shards_n = shard_count(m, threads);
  std::vector<std::set<QuadricC3>> exact_found(shards_n);
  std::vector<std::map<ModKey, std::vector<Triple>>> mod_found(shards_n);
  parallel_shards(shards_n, threads, [&](std::size_t s, std::size_t, std::size_t) {
    for (std::size_t i = s; i < m; i += shards_n) {
      for (std::size_t j = i + 1; j + 1 < m; ++j) {
        const std::uint64_t first = triple_rank(m, i, j, j + 1);
        if (first >= cap) break;
        if (is_coplanar(i, j)) continue;
        const std::size_t k_end = static_cast<std::size_t>(std::min<std::uint64_t>(m, j + 1 + (cap - first)));
        if (!search.modular_pair(i, j, k_end, mod_found[s])) search.exact_pair(i, j, k_end, exact_found[s]);
      }
    }
  });

  std::map<QuadricC3, std::vector<std::size_t>> found;
  auto recount = [&](const QuadricC3& q, const ModKey* key) -> const std::vector<std::size_t>& {
    auto [it, fresh] = found.try_emplace(q);
    if (fresh)
      for (std::size_t k = 0; k < m; ++k)
        if ((!key || search.mod_contains(search.reduced[k], *key)) && line_in_quadric(lines[k], q)) it->second.push_back(k);
    return it->second;
  };
  for (auto& c : exact_found)
    for (const auto& q : c) recount(q, nullptr);

  // Keys are merged across shards. Distinct exact quadrics could share a key,
  // so a triple counts as settled only once an exact quadric holds all three.
  std::map<ModKey, std::vector<Triple>> by_key;
  for (auto& shard : mod_found)
    for (auto& [key, reps] : shard) {
      auto& dst = by_key[key];
      dst.insert(dst.end(), reps.begin(), reps.end());
    }
  for (auto& [key, reps] : by_key) {
    std::sort(reps.begin(), reps.end());
    std::vector<const std::vector<std::size_t>*> held;
    for (const auto& t : reps) {
      const bool settled = std::any_of(held.begin(), held.end(), [&](const auto* on) {
        return std::all_of(t.begin(), t.end(), [&](std::size_t x) { return std::binary_search(on->begin(), on->end(), x); });
      });
      if (settled) continue;
      const std::array<LineC3, 3> triple{lines[t[0]], lines[t[1]], lines[t[2]]};
      const auto fit = fit_quadrics(triple);
      if (fit.size() == 1) held.push_back(&recount(fit.front(), &key));
    }
  }

  for (auto& [q, on] : found)
    if (on.size() >= threshold) report.quadrics.push_back({q, std::move(on)});
  return report;
}

StructureReport structure_report(std::span<const LineC3> lines, std::size_t r, double epsilon,
                                 const SurfaceOptions& options) {
  if (r < 2) throw std::invalid_argument("structure_report: r must be at least 2");
  StructureReport out;
  const auto n = static_cast<double>(lines.size());
  out.line_count = lines.size();
  out.r = r;
  out.r_prime = std::max<std::size_t>(2, (r + 2) / 3);
  out.epsilon = epsilon;
  out.threshold = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(static_cast<double>(r) * std::pow(n, 0.5 + epsilon))));

  SurfaceOptions plane_only = options;
  plane_only.quadrics = false;
  out.planes = rich_surfaces(lines, out.threshold, plane_only).planes;

  const auto points = rich_points(lines, options.threads);
  for (const auto& [p, through] : points.incidences) {
    if (through.size() < r) continue;
    ++out.rich_count;
    bool covered = false;
    for (const auto& w : out.planes) {
      std::size_t inside = 0;
      for (auto idx : through)
        if (std::binary_search(w.lines.begin(), w.lines.end(), idx)) ++inside;
      if (inside >= out.r_prime) {
        covered = true;
        break;
      }
    }
    if (!covered) ++out.residual;
  }
  out.reference = std::pow(n, 1.5 + epsilon) / (static_cast<double>(r) * static_cast<double>(r));
  out.ratio = out.reference > 0 ? static_cast<double>(out.residual) / out.reference : 0.0;
  return out;
}

}  // namespace cxd
