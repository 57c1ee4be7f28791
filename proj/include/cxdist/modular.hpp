#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cxdist/gaussian.hpp"

namespace cxd {

// Arithmetic in Z/p for a prime p < 2^62 with p = 1 (mod 4). Such a field
// contains a square root of -1, so Gaussian rationals whose denominators are
// prime to p reduce into it homomorphically.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t sqrt_minus_one() const { return i_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  // Sum of a[t] * b[t * stride], reduced once per eight terms.
  std::uint64_t dot(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::size_t stride = 1) const {
    unsigned __int128 acc = 0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += static_cast<unsigned __int128>(a[t]) * b[t * stride];
      if ((t & 7) == 7) acc %= p_;
    }
    return static_cast<std::uint64_t>(acc % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0

  // Image of q, or nullopt when p divides the denominator.
  std::optional<std::uint64_t> reduce(const Rational& q) const;
  std::optional<std::uint64_t> reduce(const GaussianRational& z) const;

 private:
  std::uint64_t p_;
  std::uint64_t i_;
};

// Primes just below 2^62, all 1 mod 4; callers try them in order.
inline constexpr std::array<std::uint64_t, 4> kFieldPrimes{4611686018427387817ull, 4611686018427387761ull,
                                                           4611686018427387737ull, 4611686018427387733ull};

// Dense row-major matrix over a PrimeField.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Kernel basis with the same conventions as the exact nullspace(): one
// vector per free column, that coordinate set to 1.
std::vector<std::vector<std::uint64_t>> nullspace_mod(const PrimeField& f, ModMatrix m);

}  // namespace cxd
