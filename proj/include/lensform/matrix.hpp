#pragma once

#include "lensform/arith.hpp"
#include "lensform/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace lensform {

/// Small dense row-major matrix. Sizes here are tiny (n <= a handful), so no
/// attempt is made at blocking or views.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t dim) {
    Matrix m(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = U((*this)(r, c));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer quot = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --quot;
  return quot;
}

inline void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= factor * m(r, src);
}

inline void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace detail

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `generators` (which must have full row rank). The result is square and upper
/// triangular with positive diagonal; in each row the entries right of the
/// diagonal lie in [0, diagonal).
inline IntMatrix hermite_normal_form(IntMatrix generators) {
  const std::size_t n = generators.rows();
  std::size_t active = generators.cols();  // columns [0, active) not yet pivots
  IntMatrix work = std::move(generators);
  IntMatrix hnf(n, n);

  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t r = n - 1 - step;
    // Euclid across the active columns on row r.
    while (true) {
      std::size_t best = active;
      for (std::size_t c = 0; c < active; ++c) {
        if (work(r, c) == 0) continue;
        if (best == active || abs(work(r, c)) < abs(work(r, best))) best = c;
      }
      if (best == active) throw SingularBasis();
      bool reduced = false;
      for (std::size_t c = 0; c < active; ++c) {
        if (c == best || work(r, c) == 0) continue;
        detail::axpy_column(work, c, best, detail::floor_div(work(r, c), work(r, best)));
        reduced = true;
      }
      if (!reduced) {
        if (work(r, best) < 0)
          for (std::size_t i = 0; i < n; ++i) work(i, best) = -work(i, best);
        detail::swap_columns(work, best, active - 1);
        break;
      }
    }
    --active;
    for (std::size_t i = 0; i < n; ++i) hnf(i, r) = work(i, active);
  }
  for (std::size_t c = 0; c < active; ++c)
    for (std::size_t i = 0; i < n; ++i)
      if (work(i, c) != 0) throw Error("generators are not contained in the spanned lattice");

  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t i = n - 1 - s;
    for (std::size_t j = i + 1; j < n; ++j)
      detail::axpy_column(hnf, j, i, detail::floor_div(hnf(i, j), hnf(i, i)));
  }
  return hnf;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      detail::swap_rows(m, k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact inverse over the rationals.
inline RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("inverse of non-square matrix");
  RationalMatrix a = m.cast<Rational>();
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularBasis();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

/// Diagonal of the Smith normal form (nonnegative, each dividing the next),
/// by integer row and column reduction.
inline std::vector<Integer> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t len = std::min(rows, cols);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < len; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    auto place_min = [&]() {
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (br == rows || abs(m(r, c)) < abs(m(br, bc)))) br = r, bc = c;
      if (br == rows) return false;
      detail::swap_rows(m, t, br);
      detail::swap_columns(m, t, bc);
      return true;
    };
    if (!place_min()) break;
    while (true) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        const Integer f = detail::floor_div(m(r, t), m(t, t));
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= f * m(t, c);
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        detail::axpy_column(m, c, t, detail::floor_div(m(t, c), m(t, t)));
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) {
        place_min();
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(bad_row, c);
    }
    diag.push_back(abs(m(t, t)));
  }
  diag.resize(len, Integer(0));
  return diag;
}

/// gcd of all maximal minors of a matrix with rows <= cols.
inline Integer maximal_minor_gcd(const IntMatrix& m) {
  const std::size_t k = m.rows(), n = m.cols();
  if (k > n) throw Error("maximal minors need rows <= cols");
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  Integer g = 0;
  do {
    IntMatrix sub(k, k);
    std::size_t out = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!pick[c]) continue;
      for (std::size_t r = 0; r < k; ++r) sub(r, out) = m(r, c);
      ++out;
    }
    g = gcd(g, abs(determinant(std::move(sub))));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

}  // namespace lensform
