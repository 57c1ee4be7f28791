#pragma once

#include <vector>

#include "cxdist/generators.hpp"
#include "cxdist/linalg.hpp"
#include "cxdist/multipoly.hpp"

namespace cxt {

using cxd::GaussianRational;
using cxd::Rational;

inline GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }
inline const GaussianRational I = GaussianRational::i();

// Random Gaussian-rational matrix with roughly `zero_percent` zero entries.
inline cxd::Matrix random_matrix(cxd::Rng& rng, Eigen::Index rows, Eigen::Index cols, int zero_percent = 30) {
  cxd::Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = rng.uniform_int(0, 99) < zero_percent ? GaussianRational(0) : rng.gaussian(5);
  return m;
}

// Random polynomial in n variables with up to `terms` terms of degree <= deg.
template <typename Scalar, typename Coef>
cxd::MultiPoly<Scalar> random_poly(cxd::Rng& rng, std::size_t n, unsigned deg, int terms, Coef&& coef) {
  cxd::MultiPoly<Scalar> p(n);
  for (int t = 0; t < terms; ++t) {
    cxd::Monomial m(n, 0);
    const auto d = static_cast<unsigned>(rng.uniform_int(0, deg));
    for (unsigned k = 0; k < d; ++k) ++m[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))];
    p.add_term(std::move(m), coef());
  }
  return p;
}

inline cxd::MultiPoly<GaussianRational> random_cpoly(cxd::Rng& rng, std::size_t n, unsigned deg, int terms) {
  return random_poly<GaussianRational>(rng, n, deg, terms, [&] { return rng.gaussian_integer(4); });
}

inline cxd::MultiPoly<Rational> random_rpoly(cxd::Rng& rng, std::size_t n, unsigned deg, int terms) {
  return random_poly<Rational>(rng, n, deg, terms, [&] { return Rational(rng.uniform_int(-4, 4)); });
}

}  // namespace cxt
