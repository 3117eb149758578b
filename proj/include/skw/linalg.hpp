#pragma once

// Dense exact linear algebra: row echelon forms, rank, nullspace, span tests.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "skw/scalars.hpp"

namespace skw {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols && c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  void append_row(const std::vector<T>& values) {
    data_.insert(data_.end(), values.begin(), values.end());
    data_.resize((rows_ + 1) * cols_);
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Incrementally maintained reduced echelon basis of a row space. Each stored
/// row is monic at its pivot and zero in every other stored pivot column.
template <ExactField K>
class RowBasis {
 public:
  using S = Scalar<K>;

  RowBasis(K field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<S>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis in place; returns true if v became zero.
  bool reduce(std::vector<S>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S f = v[pivots_[i]];
      if (f.is_zero()) continue;
      for (std::size_t c : support_[i]) v[c] -= f * rows_[i][c];
    }
    return std::all_of(v.begin(), v.end(), [](const S& s) { return s.is_zero(); });
  }

  bool contains(std::vector<S> v) const { return reduce(v); }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(std::vector<S> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    const S inv = v[p].inverse();
    std::vector<std::size_t> supp;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) {
        v[c] = v[c] * inv;
        supp.push_back(c);
      }
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S f = rows_[i][p];
      if (f.is_zero()) continue;
      for (std::size_t c : supp) rows_[i][c] -= f * v[c];
      support_[i] = support_of(rows_[i]);
    }
    auto pos = static_cast<std::ptrdiff_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    support_.insert(support_.begin() + pos, std::move(supp));
    return true;
  }

 private:
  static std::vector<std::size_t> support_of(const std::vector<S>& v) {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) s.push_back(c);
    }
    return s;
  }

  K field_;
  std::size_t cols_;
  std::vector<std::vector<S>> rows_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<std::size_t> pivots_;
};

template <ExactField K>
struct Echelon {
  Matrix<Scalar<K>> reduced;          // rank rows, reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Only the nonzero rows are kept.
template <ExactField K>
Echelon<K> rref(const K& field, const Matrix<Scalar<K>>& m) {
  using S = Scalar<K>;
  std::vector<std::vector<S>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const std::size_t ncols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  std::vector<std::size_t> supp;
  for (std::size_t c = 0; c < ncols && top < rows.size(); ++c) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const S inv = rows[top][c].inverse();
    supp.clear();
    for (std::size_t j = c; j < ncols; ++j) {
      if (!rows[top][j].is_zero()) {
        rows[top][j] = rows[top][j] * inv;
        supp.push_back(j);
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][c].is_zero()) continue;
      const S f = rows[r][c];
      for (std::size_t j : supp) rows[r][j] -= f * rows[top][j];
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  Echelon<K> e;
  e.reduced = Matrix<S>::from_rows(rows, ncols);
  e.pivots = std::move(pivots);
  (void)field;
  return e;
}

/// Rank by forward elimination, eliminating along the shorter dimension.
template <ExactField K>
std::size_t rank(const K& field, const Matrix<Scalar<K>>& m) {
  using S = Scalar<K>;
  const bool flip = m.cols() < m.rows();
  const std::size_t nr = flip ? m.cols() : m.rows();
  const std::size_t nc = flip ? m.rows() : m.cols();
  std::vector<std::vector<S>> rows(nr, std::vector<S>(nc));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (flip) {
        rows[c][r] = m(r, c);
      } else {
        rows[r][c] = m(r, c);
      }
    }
  }
  std::size_t top = 0;
  std::vector<std::size_t> supp;
  for (std::size_t c = 0; c < nc && top < nr; ++c) {
    std::size_t piv = top;
    while (piv < nr && rows[piv][c].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(rows[top], rows[piv]);
    const S inv = rows[top][c].inverse();
    supp.clear();
    for (std::size_t j = c + 1; j < nc; ++j) {
      if (!rows[top][j].is_zero()) supp.push_back(j);
    }
    for (std::size_t r = top + 1; r < nr; ++r) {
      if (rows[r][c].is_zero()) continue;
      const S f = rows[r][c] * inv;
      rows[r][c] = S();
      for (std::size_t j : supp) rows[r][j] -= f * rows[top][j];
    }
    ++top;
  }
  (void)field;
  return top;
}

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that column.
template <ExactField K>
std::vector<std::vector<Scalar<K>>> nullspace(const K& field, const Matrix<Scalar<K>>& m) {
  using S = Scalar<K>;
  Echelon<K> e = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(m.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Row spaces of a and b coincide.
template <ExactField K>
bool span_equal(const K& field, const Matrix<Scalar<K>>& a, const Matrix<Scalar<K>>& b) {
  if (a.cols() != b.cols()) return false;
  Echelon<K> ea = rref(field, a);
  Echelon<K> eb = rref(field, b);
  return ea.pivots == eb.pivots && ea.reduced == eb.reduced;
}

template <class T>
T det3(const Matrix<T>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

/// Inverse of a square matrix; throws if singular.
template <ExactField K>
Matrix<Scalar<K>> inverse(const K& field, const Matrix<Scalar<K>>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::invalid_argument, "inverse of a non-square matrix");
  Matrix<Scalar<K>> aug(n, 2 * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = field.one();
  }
  Echelon<K> e = rref(field, aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::division_by_zero, "singular matrix");
  Matrix<Scalar<K>> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

}  // namespace skw
