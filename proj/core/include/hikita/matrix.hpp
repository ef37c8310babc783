#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hikita/error.hpp"
#include "hikita/ratfun.hpp"
#include "hikita/rational.hpp"

namespace hikita {

/// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols) requires std::is_same_v<T, Rational>
      : Matrix(rows, cols, Rational(0)) {}

  /// Rows must be nonempty and rectangular.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows.front().empty()) throw InvalidInput("matrix needs at least one entry");
    Matrix m(rows.size(), rows.front().size(), rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix identity(std::size_t n) requires std::is_same_v<T, Rational> { return identity(n, Rational(1)); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw InvalidInput("matrix index out of range");
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw InvalidInput("matrix index out of range");
    return (*this)(i, j);
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  void set_col(std::size_t j, const std::vector<T>& c) {
    if (c.size() != rows_) throw InvalidInput("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  /// A zero of the entry domain; requires a nonempty matrix.
  T zero() const { return zero_like(data_.front()); }
  T one() const { return one_like(data_.front()); }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    if (rs.empty() || cs.empty()) throw InvalidInput("empty submatrix");
    Matrix s(rs.size(), cs.size(), zero());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = at(rs[i], cs[j]);
    return s;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (!hikita::is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_, a.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (hikita::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (hikita::is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (T& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Applies f to every entry.
  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<std::vector<U>> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) rows[i].push_back(f((*this)(i, j)));
    return Matrix<U>::from_rows(rows);
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using RFMatrix = Matrix<RationalFunction>;

/// Fraction-free (Bareiss) determinant.
template <class T>
T det(const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  T prev = m.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return m.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = m.zero();
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? -d : d;
}

/// Laplace expansion along the first row; exponential, for small matrices
/// and as an independent check.
template <class T>
T det_expansion(const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  std::vector<std::size_t> rest_rows;
  for (std::size_t i = 1; i < n; ++i) rest_rows.push_back(i);
  T total = m.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    std::vector<std::size_t> cs;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cs.push_back(c);
    T term = m(0, j) * det_expansion(m.submatrix(rest_rows, cs));
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const T inv = a.one() / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  Matrix<T> a = m;
  return rref_in_place(a).size();
}

/// Basis of the right kernel, one vector per free column, in column order.
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
  Matrix<T> a = m;
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), m.zero());
    v[f] = m.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Affine solution set of A x = b.
template <class T>
struct LinearSolution {
  std::vector<T> particular;            // free variables set to zero
  std::vector<std::vector<T>> kernel;  // homogeneous solutions
};

/// nullopt when the system is inconsistent.
template <class T>
std::optional<LinearSolution<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  LinearSolution<T> sol;
  sol.particular.assign(a.cols(), a.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, a.cols());
  sol.kernel = kernel(a);
  return sol;
}

/// Throws RankError on singular input.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, m.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.one();
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw RankError("matrix is singular");
  Matrix<T> inv(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("trace of a non-square matrix");
  T t = m.zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Coefficients c_0..c_n of det(t I - m), c_n = 1 (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const QMatrix& m);

/// Rational matrix to strings in "a/b" notation, row by row.
std::vector<std::vector<std::string>> to_strings(const QMatrix& m);
QMatrix qmatrix_from_strings(const std::vector<std::vector<std::string>>& rows);

}  // namespace hikita
