#include "cxdist/modular.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

namespace cxd {
namespace {

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p), i_(0) {
  if (p % 4 != 1 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("PrimeField: need p = 1 mod 4 below 2^62");
  for (std::uint64_t g = 2; g < 1000; ++g) {
    const std::uint64_t r = pow(g, (p - 1) / 4);
    if (mul(r, r) == p - 1) {
      i_ = std::min(r, p - r);
      return;
    }
  }
  throw std::invalid_argument("PrimeField: no square root of -1 found; modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a % p_);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return s0 < 0 ? static_cast<std::uint64_t>(s0 + static_cast<std::int64_t>(p_)) : static_cast<std::uint64_t>(s0);
}

std::optional<std::uint64_t> PrimeField::reduce(const Rational& q) const {
  const std::uint64_t den = mpz_mod(q.denominator(), p_);
  if (den == 0) return std::nullopt;
  return mul(mpz_mod(q.numerator(), p_), inv(den));
}

std::optional<std::uint64_t> PrimeField::reduce(const GaussianRational& z) const {
  const auto re = reduce(z.re());
  const auto im = reduce(z.im());
  if (!re || !im) return std::nullopt;
  return add(*re, mul(i_, *im));
}

std::vector<std::vector<std::uint64_t>> nullspace_mod(const PrimeField& f, ModMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    const std::uint64_t inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::uint64_t k = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(k, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = f.neg(m(row, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cxd
