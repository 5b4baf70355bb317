#ifndef MANIN_LINALG_HPP
#define MANIN_LINALG_HPP

// Exact dense linear algebra over Rational / Gaussian: reduced row echelon
// forms, kernels, determinants, and canonical subspaces.

#include "error.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace manin {

template <class F> using Vec = std::vector<F>;

template <class F> Vec<F> zero_vec(std::size_t n) { return Vec<F>(n, F(0)); }

template <class F> Vec<F> unit_vec(std::size_t n, std::size_t k) {
  Vec<F> v = zero_vec<F>(n);
  v.at(k) = F(1);
  return v;
}

template <class F> bool is_zero_vec(std::span<const F> v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}
template <class F> bool is_zero_vec(const Vec<F>& v) { return is_zero_vec(std::span<const F>(v)); }

template <class F> void axpy(Vec<F>& y, const F& a, const Vec<F>& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy length mismatch");
  if (is_zero(a)) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(x[k])) y[k] += a * x[k];
}

template <class F> Vec<F> scaled(Vec<F> v, const F& a) {
  for (auto& x : v) x *= a;
  return v;
}

template <class F> Vec<F> operator+(Vec<F> a, const Vec<F>& b) {
  axpy(a, F(1), b);
  return a;
}
template <class F> Vec<F> operator-(Vec<F> a, const Vec<F>& b) {
  axpy(a, F(-1), b);
  return a;
}

template <class F> Vec<F> conj_vec(Vec<F> v) {
  for (auto& x : v) x = conj(x);
  return v;
}

template <class F> Vec<F> concat(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

template <class F> Vec<Gaussian> to_gaussian(const Vec<F>& v) {
  Vec<Gaussian> r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

// Row-major dense matrix.
template <class F> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vec<F> col(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector length mismatch");
    Vec<F> out = zero_vec<F>(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (!is_zero((*this)(r, c))) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(r, k);
        if (is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!is_zero(b(k, c))) p(r, c) += x * b(k, c);
      }
    return p;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

// Reduces rows in place to reduced row echelon form; pivots are taken in
// increasing column order, so the result is canonical for the row space.
// Returns the pivot column of each nonzero row; zero rows are dropped.
template <class F> std::vector<std::size_t> rref_rows(std::vector<Vec<F>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    F inv = F(1) / rows[rank][c];
    for (std::size_t k = c; k < cols; ++k)
      if (!is_zero(rows[rank][k])) rows[rank][k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || is_zero(rows[r][c])) continue;
      F f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!is_zero(rows[rank][k])) rows[r][k] -= f * rows[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

template <class F> std::size_t rank_of(std::vector<Vec<F>> rows, std::size_t cols) {
  return rref_rows(rows, cols).size();
}

template <class F> std::size_t rank_of(const Matrix<F>& m) {
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rank_of(std::move(rows), m.cols());
}

// Basis of {x : m x = 0}, in reduced form (free variables set to unit vectors).
template <class F> std::vector<Vec<F>> kernel(const Matrix<F>& m) {
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  auto pivots = rref_rows(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = zero_vec<F>(m.cols());
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Left kernel: {c : sum_k c_k rows_k = 0}.
template <class F> std::vector<Vec<F>> left_kernel(const std::vector<Vec<F>>& rows, std::size_t cols) {
  return kernel(Matrix<F>::from_rows(rows, cols).transpose());
}

template <class F> F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      F f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!is_zero(m(c, k))) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

// Solves m x = b; returns nullopt if inconsistent.  Free variables are zero.
template <class F> std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve rhs length mismatch");
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec<F> row = m.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  auto pivots = rref_rows(rows, m.cols() + 1);
  Vec<F> x = zero_vec<F>(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = rows[r][m.cols()];
  }
  return x;
}

template <class F> std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    Vec<F> row = m.row(r);
    Vec<F> e = unit_vec<F>(n, r);
    row.insert(row.end(), e.begin(), e.end());
    rows.push_back(std::move(row));
  }
  auto pivots = rref_rows(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

// Identity tag of the ambient space a subspace lives in.  Zero means "any".
using SpaceId = std::uint64_t;
SpaceId next_space_id();

// A subspace of F^n stored as its canonical reduced echelon basis, so two
// subspaces are equal iff their stored bases are equal.
template <class F> class Subspace {
public:
  Subspace() = default;
  Subspace(std::size_t ambient, SpaceId parent) : ambient_(ambient), parent_(parent) {}

  static Subspace span(std::size_t ambient, SpaceId parent, std::vector<Vec<F>> vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw Error(ErrorCode::DimensionMismatch, "spanning vector has wrong length");
    Subspace s(ambient, parent);
    s.pivots_ = rref_rows(vectors, ambient);
    s.basis_ = std::move(vectors);
    return s;
  }
  static Subspace whole(std::size_t ambient, SpaceId parent) {
    std::vector<Vec<F>> rows;
    for (std::size_t k = 0; k < ambient; ++k) rows.push_back(unit_vec<F>(ambient, k));
    return span(ambient, parent, std::move(rows));
  }
  static Subspace coordinate(std::size_t ambient, SpaceId parent, const std::vector<std::size_t>& coords) {
    std::vector<Vec<F>> rows;
    for (auto k : coords) {
      if (k >= ambient) throw Error(ErrorCode::IndexOutOfRange, "coordinate index out of range");
      rows.push_back(unit_vec<F>(ambient, k));
    }
    return span(ambient, parent, std::move(rows));
  }

  std::size_t ambient() const { return ambient_; }
  SpaceId parent() const { return parent_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero_space() const { return basis_.empty(); }

  // Remainder of v after eliminating the pivot coordinates; zero iff v lies in
  // the subspace.  This is also the canonical representative of v modulo it.
  Vec<F> reduce(Vec<F> v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const F& c = v[pivots_[r]];
      if (is_zero(c)) continue;
      F f = c;
      const Vec<F>& b = basis_[r];
      for (std::size_t k = pivots_[r]; k < ambient_; ++k)
        if (!is_zero(b[k])) v[k] -= f * b[k];
    }
    return v;
  }
  bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }

  // Coordinates of a member vector with respect to the echelon basis.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    check_compatible(other);
    std::vector<Vec<F>> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, merged_parent(other), std::move(rows));
  }

  // Zassenhaus: echelonize [u|u] over [v|0]; rows with a zero left half
  // carry the intersection on the right.
  Subspace intersect(const Subspace& other) const {
    check_compatible(other);
    std::vector<Vec<F>> rows;
    for (const auto& u : basis_) rows.push_back(concat(u, u));
    for (const auto& v : other.basis_) rows.push_back(concat(v, zero_vec<F>(ambient_)));
    auto pivots = rref_rows(rows, 2 * ambient_);
    std::vector<Vec<F>> meet;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pivots[r] < ambient_) continue;
      meet.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(ambient_), rows[r].end());
    }
    return span(ambient_, merged_parent(other), std::move(meet));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_compatible(const Subspace& other) const {
    if (parent_ != 0 && other.parent_ != 0 && parent_ != other.parent_)
      throw Error(ErrorCode::ParentMismatch, "subspaces belong to different ambient spaces");
    if (ambient_ != other.ambient_) throw Error(ErrorCode::DimensionMismatch, "subspaces have different ambient dimension");
  }

private:
  SpaceId merged_parent(const Subspace& other) const { return parent_ != 0 ? parent_ : other.parent_; }

  std::size_t ambient_ = 0;
  SpaceId parent_ = 0;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F> Subspace<Gaussian> to_gaussian(const Subspace<F>& s) {
  std::vector<Vec<Gaussian>> rows;
  for (const auto& b : s.basis()) rows.push_back(to_gaussian(b));
  return Subspace<Gaussian>::span(s.ambient(), s.parent(), std::move(rows));
}

template <class F> Matrix<Gaussian> to_gaussian(const Matrix<F>& m) {
  Matrix<Gaussian> g(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = Gaussian(m(r, c));
  return g;
}

}  // namespace manin

#endif
