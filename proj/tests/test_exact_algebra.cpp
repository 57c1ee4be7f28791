#include "doctest.h"

#include <unordered_set>

#include "support.hpp"

using namespace cxd;
using cxt::gi;
using cxt::I;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK(Rational(-3, 9).denominator() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational parse round trip") {
  for (const char* s : {"0", "5", "-5", "1/2", "-22/7", "123456789012345678901234567891/2"}) {
    CHECK(Rational::parse(s).to_string() == s);
  }
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("a"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("rational overflow falls back to big integers and back") {
  const Rational big(std::int64_t{1} << 62);
  const Rational sq = big * big;
  CHECK(sq.to_string() == "21267647932558653966460912964485513216");
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  const Rational back = (sq + Rational(1)) - sq;
  CHECK(back == Rational(1));
  CHECK(back.hash() == Rational(1).hash());
  const Rational m(std::numeric_limits<std::int64_t>::min() + 1);
  CHECK(-(-m) == m);
  CHECK((m - Rational(5)) + Rational(5) == m);
}

TEST_CASE("rational ordering and hashing agree with value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  const Rational big = Rational(std::int64_t{1} << 62) * Rational(4);
  CHECK(Rational(1) < big);
  CHECK(-big < Rational(-1));
  std::unordered_set<Rational> set{Rational(1, 2), Rational(2, 4), Rational(-1, 2)};
  CHECK(set.size() == 2);
}

TEST_CASE("rational and gaussian arithmetic round trips on random values") {
  Rng rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    // Mix small and large magnitudes to exercise both representations.
    const std::int64_t bound = trial % 3 == 0 ? (std::int64_t{1} << 40) : 100;
    const Rational a = rng.rational(bound), b = rng.rational(bound);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);

    const GaussianRational x = rng.gaussian(bound), y = rng.gaussian(bound);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
  }
}

TEST_CASE("gaussian field axioms and conjugation") {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const GaussianRational a = rng.gaussian(30), b = rng.gaussian(30), c = rng.gaussian(30);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a * a.conj() == GaussianRational(a.norm()));
  }
  CHECK(I * I == GaussianRational(-1));
  CHECK(gi(1, 2).to_string() == "1+2i");
  CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("nullspace examples") {
  Matrix id = Matrix::Identity(3, 3);
  CHECK(nullspace(id).empty());

  Matrix row(1, 2);
  row << 1, I;
  const auto basis = nullspace(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0](0) == -I);
  CHECK(basis[0](1) == GaussianRational(1));

  Matrix zero = Matrix::Zero(2, 3);
  CHECK(nullspace(zero).size() == 3);
}

TEST_CASE("nullspace property: annihilated, independent, rank-nullity") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = rng.uniform_int(1, 6), cols = rng.uniform_int(1, 7);
    Matrix m = cxt::random_matrix(rng, rows, cols, 40);
    if (trial % 4 == 0 && rows > 1) m.row(rows - 1) = m.row(0) * rng.gaussian(3);  // force dependence
    const auto basis = nullspace(m);
    for (const auto& v : basis) CHECK(is_zero(multiply(m, v)));
    CHECK(rank(m) + static_cast<Eigen::Index>(basis.size()) == cols);
    if (!basis.empty()) {
      Matrix b(cols, static_cast<Eigen::Index>(basis.size()));
      for (std::size_t k = 0; k < basis.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = basis[k];
      CHECK(rank(b) == static_cast<Eigen::Index>(basis.size()));
    }
  }
}

TEST_CASE("solve_particular") {
  Matrix a(2, 3);
  a << 1, 2, 3, 0, 1, I;
  Vector b(2);
  b << 1, 2;
  const auto x = solve_particular(a, b);
  REQUIRE(x);
  CHECK(multiply(a, *x) == Matrix(b));

  Matrix c(2, 1);
  c << 1, 1;
  Vector d(2);
  d << 1, 2;
  CHECK_FALSE(solve_particular(c, d));
}

using CPoly = MultiPoly<GaussianRational>;

TEST_CASE("poly_eval examples") {
  const CPoly x = CPoly::variable(2, 0), y = CPoly::variable(2, 1);
  CHECK((x * x + y * y)({1, I}).is_zero());
  CHECK(CPoly::constant(3, 7)({5, I, 2}) == GaussianRational(7));
  const CPoly a = CPoly::variable(3, 0), b = CPoly::variable(3, 1), c = CPoly::variable(3, 2);
  CHECK((a * b - c)({2, 3, 6}).is_zero());
  CHECK_THROWS_AS((a * b)({1, 2}), std::invalid_argument);
}

TEST_CASE("poly terms are canonical in graded lex order") {
  const CPoly x = CPoly::variable(2, 0), y = CPoly::variable(2, 1);
  const CPoly f = y + x * x + x * y + CPoly::constant(2, 1);
  std::vector<Monomial> order;
  for (const auto& [m, c] : f.terms()) order.push_back(m);
  CHECK(order == std::vector<Monomial>{{2, 0}, {1, 1}, {0, 1}, {0, 0}});
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  CHECK((x - x).degree() == -1);
  CHECK_THROWS_AS(x + CPoly::variable(3, 0), std::invalid_argument);
}

TEST_CASE("poly_eval is a ring homomorphism") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const CPoly f = cxt::random_cpoly(rng, 3, 3, 5), g = cxt::random_cpoly(rng, 3, 3, 5);
    const std::vector<GaussianRational> p{rng.gaussian(6), rng.gaussian(6), rng.gaussian(6)};
    const std::span<const GaussianRational> ps(p);
    CHECK((f * g).eval(ps) == f.eval(ps) * g.eval(ps));
    CHECK((f + g).eval(ps) == f.eval(ps) + g.eval(ps));
  }
}

TEST_CASE("poly_affine_compose examples") {
  const CPoly x = CPoly::variable(1, 0);
  Matrix lin(1, 1);
  lin << 1;
  Vector off(1);
  off << 1;
  CHECK(affine_compose(x * x, lin, off) == x * x + GaussianRational(2) * x + CPoly::constant(1, 1));

  Rng rng(15);
  const CPoly f = cxt::random_cpoly(rng, 3, 3, 6);
  CHECK(affine_compose(f, Matrix::Identity(3, 3), Vector::Zero(3)) == f);
  CHECK_THROWS_AS(affine_compose(f, Matrix::Identity(2, 2), Vector::Zero(2)), std::invalid_argument);
}

TEST_CASE("poly_affine_compose agrees with pointwise evaluation and composes associatively") {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const CPoly f = cxt::random_cpoly(rng, 3, 3, 6);
    const Matrix m1 = cxt::random_matrix(rng, 3, 2);
    const Vector o1 = cxt::random_matrix(rng, 3, 1);
    const Matrix m2 = cxt::random_matrix(rng, 2, 4);
    const Vector o2 = cxt::random_matrix(rng, 2, 1);

    const CPoly g = affine_compose(f, m1, o1);
    CHECK(g.degree() <= f.degree());
    const Vector v = cxt::random_matrix(rng, 2, 1, 0);
    const Vector mapped = multiply(m1, v) + o1;
    CHECK(g.eval(v) == f.eval(mapped));

    // f o (m1 o m2) = (f o m1) o m2, where (m1 o m2)(w) = m1 (m2 w + o2) + o1.
    const Matrix m12 = multiply(m1, m2);
    const Vector o12 = multiply(m1, o2) + o1;
    CHECK(affine_compose(f, m12, o12) == affine_compose(g, m2, o2));
  }
}

TEST_CASE("poly_gradient examples") {
  const CPoly x = CPoly::variable(2, 0), y = CPoly::variable(2, 1);
  const auto g = gradient(x * x + y * y);
  CHECK(g[0] == GaussianRational(2) * x);
  CHECK(g[1] == GaussianRational(2) * y);
  for (const auto& c : gradient(CPoly::constant(2, 5))) CHECK(c.is_zero());

  const CPoly x1 = CPoly::variable(3, 0), x2 = CPoly::variable(3, 1), x3 = CPoly::variable(3, 2);
  const auto h = gradient(x1 * x2 - x3 * x3);
  CHECK(h[0] == x2);
  CHECK(h[1] == x1);
  CHECK(h[2] == GaussianRational(-2) * x3);
}

TEST_CASE("gradient matches the linear coefficient of the univariate restriction") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const CPoly f = cxt::random_cpoly(rng, 3, 4, 7);
    const Vector p = cxt::random_matrix(rng, 3, 1, 0);
    const auto g = gradient(f);
    for (Eigen::Index i = 0; i < 3; ++i) {
      Matrix e = Matrix::Zero(3, 1);
      e(i, 0) = 1;
      const CPoly restricted = affine_compose(f, e, p);
      CHECK(restricted.coefficient({1}) == g[static_cast<std::size_t>(i)].eval(p));
    }
  }
}

TEST_CASE("compose substitutes polynomials") {
  const CPoly s = CPoly::variable(2, 0), t = CPoly::variable(2, 1);
  const CPoly x = CPoly::variable(1, 0);
  const CPoly f = x * x;
  CHECK(compose(f, std::vector<CPoly>{s + t}) == s * s + GaussianRational(2) * s * t + t * t);
  CHECK_THROWS_AS(compose(f, std::vector<CPoly>{s, t}), std::invalid_argument);
}
