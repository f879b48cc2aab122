#pragma once

// Dense square-or-rectangular matrices over an exact field, with free
// functions for the few operations the group code needs. The scalar only has
// to provide field operations and construction from long.

#include "fanoquot/cyclotomic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanoquot {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto &r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T &operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T &operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<T> &data() const { return data_; }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using MatC = Matrix<Cyclotomic>;
/// Polynomial coefficients, ascending degree.
template <class T>
using Poly = std::vector<T>;
using PolyC = Poly<Cyclotomic>;

template <class T>
Matrix<T> mat_mul(const Matrix<T> &a, const Matrix<T> &b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: dimension mismatch");
  Matrix<T> r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!(b(k, j) == T(0))) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) { return mat_mul(a, b); }

template <class T>
Matrix<T> scale(Matrix<T> a, const T &s) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class T>
Matrix<T> mat_add(Matrix<T> a, const Matrix<T> &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: dimension mismatch");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> mat_pow(Matrix<T> a, long e) {
  if (!a.square()) throw DimensionError("mat_pow: not square");
  Matrix<T> r = Matrix<T>::identity(a.rows());
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * a;
    if (e > 1) a = a * a;
  }
  return r;
}

template <class T>
T trace(const Matrix<T> &a) {
  if (!a.square()) throw DimensionError("trace: not square");
  T s(0);
  for (int i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

/// Gauss-Jordan; throws std::domain_error for singular input.
template <class T>
Matrix<T> mat_inv(const Matrix<T> &a) {
  if (!a.square()) throw DimensionError("mat_inv: not square");
  const int n = a.rows();
  Matrix<T> m = a, r = Matrix<T>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == T(0)) ++p;
    if (p == n) throw ArithmeticError("mat_inv: singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(r(p, j), r(c, j));
      }
    T inv = T(1) / m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) *= inv;
      r(c, j) *= inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m(i, c) == T(0)) continue;
      T f = m(i, c);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        r(i, j) -= f * r(c, j);
      }
    }
  }
  return r;
}

template <class T>
T determinant(const Matrix<T> &a) {
  if (!a.square()) throw DimensionError("determinant: not square");
  const int n = a.rows();
  Matrix<T> m = a;
  T det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == T(0)) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == T(0)) continue;
      T f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Monic characteristic polynomial det(tI - a) by Faddeev-LeVerrier.
template <class T>
Poly<T> char_poly(const Matrix<T> &a) {
  if (!a.square()) throw DimensionError("char_poly: not square");
  const int n = a.rows();
  Poly<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n); // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = trace(a * m) * (T(1) / T(-k));
  }
  return c;
}

/// p(a) for a polynomial with ascending coefficients (Horner).
template <class T>
Matrix<T> poly_eval(const Poly<T> &p, const Matrix<T> &a) {
  const int n = a.rows();
  Matrix<T> r(n, n);
  for (std::size_t i = p.size(); i-- > 0;) {
    r = r * a;
    for (int d = 0; d < n; ++d) r(d, d) += p[i];
  }
  return r;
}

/// lambda when a == lambda * I.
template <class T>
std::optional<T> is_scalar(const Matrix<T> &a) {
  if (!a.square() || a.rows() == 0) return std::nullopt;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (i == j) {
        if (!(a(i, j) == a(0, 0))) return std::nullopt;
      } else if (!(a(i, j) == T(0))) {
        return std::nullopt;
      }
    }
  return a(0, 0);
}

/// Text form "[[a,b],[c,d]]" with entries in the cyclotomic grammar.
MatC parse_matrix(std::string_view text);
std::string to_string(const MatC &m);

/// Permutation matrix with P e_j = e_{perm[j]}.
MatC permutation_matrix(const std::vector<int> &perm);
MatC diagonal_matrix(const std::vector<Cyclotomic> &d);

} // namespace fanoquot
