#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cxdist/gaussian.hpp"

namespace cxd {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatX<GaussianRational>;
using Vector = VecX<GaussianRational>;
using Vec3 = Eigen::Matrix<GaussianRational, 3, 1>;

template <typename Scalar>
struct RowEchelon {
  MatX<Scalar> reduced;              // reduced row echelon form, zero rows at the bottom
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

// Gauss-Jordan elimination over an exact field. The pivot is the first nonzero
// entry in the column, so the result depends only on the input values.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  MatX<Scalar> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = a(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) = a(i, j) - f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

// Kernel basis read off the reduced row echelon form: one vector per free
// column, in increasing column order, with that free variable set to 1.
template <typename Derived>
std::vector<VecX<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VecX<Scalar>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VecX<Scalar> v = VecX<Scalar>::Zero(cols);
    v(f) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const auto& e = ech.reduced(static_cast<Eigen::Index>(r), f);
      if (!e.is_zero()) v(ech.pivots[r]) = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// A solution of a·x = b with every free variable set to zero, or nullopt when
// the system is inconsistent.
template <typename DA, typename DB>
std::optional<VecX<typename DA::Scalar>> solve_particular(const Eigen::MatrixBase<DA>& a,
                                                          const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = rref(aug);
  VecX<Scalar> x = VecX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const auto p = ech.pivots[r];
    if (p == a.cols()) return std::nullopt;
    x(p) = ech.reduced(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Exact products. Eigen's blocked kernels are tuned for floats; these loops
// skip zero entries, which dominate the sparse exact systems used here.
template <typename DA, typename DB>
MatX<typename DA::Scalar> multiply(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  MatX<Scalar> out = MatX<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline GaussianRational dot(const Vec3& a, const Vec3& b) { return a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }

// Bilinear cross product (no conjugation): the result is orthogonal to both
// inputs under the bilinear dot product, which is what plane normals need.
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  Vec3 out;
  out << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
  return out;
}

inline GaussianRational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Lexicographic order on coordinates, for ordered containers of points.
template <typename Derived>
bool lex_less(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (auto c = a(i) <=> b(i); c != 0) return c < 0;
  }
  return false;
}

struct LexLess {
  template <typename T>
  bool operator()(const T& a, const T& b) const {
    return lex_less(a, b);
  }
};

inline Vec3 vec3(GaussianRational x, GaussianRational y, GaussianRational z) {
  Vec3 v;
  v << std::move(x), std::move(y), std::move(z);
  return v;
}

}  // namespace cxd
