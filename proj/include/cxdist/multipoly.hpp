#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxdist/linalg.hpp"

namespace cxd {

using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

// Graded lexicographic order, highest term first: larger total degree
// precedes smaller; ties broken lexicographically with x1 most significant.
struct GrlexBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// graded lexicographic order with no zero coefficients, so two polynomials are
// equal exactly when their term maps are equal.
template <typename Scalar>
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexBefore>;

  explicit MultiPoly(std::size_t variable_count = 0) : nvars_(variable_count) {}

  static MultiPoly constant(std::size_t n, const Scalar& c) {
    MultiPoly p(n);
    p.add_term(Monomial(n, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("MultiPoly::variable: index out of range");
    Monomial m(n, 0);
    m[i] = 1;
    MultiPoly p(n);
    p.add_term(std::move(m), Scalar(1));
    return p;
  }
  static MultiPoly monomial(Monomial m, const Scalar& c) {
    MultiPoly p(m.size());
    p.add_term(std::move(m), c);
    return p;
  }

  std::size_t variable_count() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Monomial m, const Scalar& c) {
    if (m.size() != nvars_) throw std::invalid_argument("MultiPoly: monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly out(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(const Scalar& s, const MultiPoly& p) {
    MultiPoly out(p.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
    return out;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly out = constant(nvars_, Scalar(1));
    for (unsigned k = 0; k < e; ++k) out *= *this;
    return out;
  }

  Scalar eval(std::span<const Scalar> point) const {
    if (point.size() != nvars_)
      throw std::invalid_argument("MultiPoly::eval: point has " + std::to_string(point.size()) +
                                  " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
    const auto powers = power_table(point);
    Scalar acc(0);
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] != 0) t = t * powers[i][m[i]];
      acc = acc + t;
    }
    return acc;
  }

  template <typename Derived>
  Scalar eval(const Eigen::MatrixBase<Derived>& point) const {
    std::vector<Scalar> p(point.begin(), point.end());
    return eval(std::span<const Scalar>(p));
  }

  Scalar operator()(std::initializer_list<Scalar> point) const {
    std::vector<Scalar> p(point);
    return eval(std::span<const Scalar>(p));
  }

  MultiPoly derivative(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("MultiPoly::derivative: index out of range");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      --d[var];
      out.add_term(std::move(d), Scalar(static_cast<long>(m[var])) * c);
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        out += "*x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
      }
    }
    return out;
  }

 private:
  void check_arity(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  std::vector<std::vector<Scalar>> power_table(std::span<const Scalar> point) const {
    std::vector<unsigned> maxdeg(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) maxdeg[i] = std::max(maxdeg[i], m[i]);
    std::vector<std::vector<Scalar>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      powers[i].reserve(maxdeg[i] + 1);
      powers[i].push_back(Scalar(1));
      for (unsigned k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    return powers;
  }

  std::size_t nvars_;
  TermMap terms_;
};

template <typename Scalar>
std::vector<MultiPoly<Scalar>> gradient(const MultiPoly<Scalar>& f) {
  std::vector<MultiPoly<Scalar>> g;
  g.reserve(f.variable_count());
  for (std::size_t i = 0; i < f.variable_count(); ++i) g.push_back(f.derivative(i));
  return g;
}

// f(subs[0], ..., subs[n-1]); every substituted polynomial shares one arity.
template <typename Scalar>
MultiPoly<Scalar> compose(const MultiPoly<Scalar>& f, std::span<const MultiPoly<Scalar>> subs) {
  if (subs.size() != f.variable_count())
    throw std::invalid_argument("compose: expected " + std::to_string(f.variable_count()) + " substitutions, got " +
                                std::to_string(subs.size()));
  const std::size_t m = subs.empty() ? 0 : subs.front().variable_count();
  for (const auto& s : subs)
    if (s.variable_count() != m) throw std::invalid_argument("compose: substitutions differ in arity");

  std::vector<std::vector<MultiPoly<Scalar>>> powers(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) powers[i].push_back(MultiPoly<Scalar>::constant(m, Scalar(1)));
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly<Scalar>& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * subs[i]);
    return powers[i][e];
  };

  MultiPoly<Scalar> out(m);
  for (const auto& [mono, c] : f.terms()) {
    MultiPoly<Scalar> t = MultiPoly<Scalar>::constant(m, c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] != 0) t = t * power(i, mono[i]);
    out += t;
  }
  return out;
}

template <typename Scalar>
MultiPoly<Scalar> compose(const MultiPoly<Scalar>& f, const std::vector<MultiPoly<Scalar>>& subs) {
  return compose(f, std::span<const MultiPoly<Scalar>>(subs));
}

// g(v) = f(linear * v + offset), where linear has one row per variable of f.
template <typename Scalar, typename DL, typename DO>
MultiPoly<Scalar> affine_compose(const MultiPoly<Scalar>& f, const Eigen::MatrixBase<DL>& linear,
                                 const Eigen::MatrixBase<DO>& offset) {
  if (static_cast<std::size_t>(linear.rows()) != f.variable_count() || offset.size() != linear.rows())
    throw std::invalid_argument("affine_compose: map output dimension " + std::to_string(linear.rows()) +
                                " does not match polynomial arity " + std::to_string(f.variable_count()));
  const auto m = static_cast<std::size_t>(linear.cols());
  std::vector<MultiPoly<Scalar>> subs;
  subs.reserve(f.variable_count());
  for (Eigen::Index r = 0; r < linear.rows(); ++r) {
    MultiPoly<Scalar> s = MultiPoly<Scalar>::constant(m, offset(r));
    for (Eigen::Index c = 0; c < linear.cols(); ++c) {
      if (linear(r, c).is_zero()) continue;
      Monomial mono(m, 0);
      mono[static_cast<std::size_t>(c)] = 1;
      s.add_term(std::move(mono), linear(r, c));
    }
    subs.push_back(std::move(s));
  }
  return compose(f, subs);
}

}  // namespace cxd
