#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lorentz/error.hpp"
#include "lorentz/numeric.hpp"

namespace lorentz {

template <class T>
using Vec = std::vector<T>;

using IVec = Vec<Int>;
using QVec = Vec<Rat>;

// Dense row-major matrix over an exact scalar type.
template <class T>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& row : init) {
      if (row.size() != cols) fail("dimension_mismatch", "ragged matrix literal");
      for (const auto& x : row) a.push_back(x);
    }
  }

  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& x : a)
      if (x != 0) return false;
    return true;
  }

  Vec<T> col(std::size_t j) const {
    Vec<T> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vec<T> row(std::size_t i) const {
    Vec<T> v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = (*this)(i, j);
    return v;
  }

  void set_col(std::size_t j, const Vec<T>& v) {
    for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
  }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) fail("dimension_mismatch", "matrix product shape");
  Mat<T> z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const T& xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

template <class T>
Vec<T> operator*(const Mat<T>& m, const Vec<T>& v) {
  if (m.cols != v.size()) fail("dimension_mismatch", "matrix-vector shape");
  Vec<T> w(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    T s = 0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
    w[i] = s;
  }
  return w;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail("dimension_mismatch", "matrix sum shape");
  Mat<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail("dimension_mismatch", "matrix diff shape");
  Mat<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

template <class T>
Mat<T> pow(const Mat<T>& m, unsigned long e) {
  if (m.rows != m.cols) fail("dimension_mismatch", "power of non-square matrix");
  Mat<T> r = Mat<T>::identity(m.rows);
  Mat<T> b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class T>
Vec<T> vec_add(const Vec<T>& x, const Vec<T>& y) {
  if (x.size() != y.size()) fail("dimension_mismatch", "vector sum shape");
  Vec<T> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

template <class T>
Vec<T> vec_sub(const Vec<T>& x, const Vec<T>& y) {
  if (x.size() != y.size()) fail("dimension_mismatch", "vector diff shape");
  Vec<T> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

template <class T, class S>
Vec<T> vec_scale(const S& c, const Vec<T>& x) {
  Vec<T> z = x;
  for (auto& v : z) v *= c;
  return z;
}

template <class T>
bool vec_is_zero(const Vec<T>& x) {
  for (const T& v : x)
    if (v != 0) return false;
  return true;
}

inline QMat to_rational(const IMat& m) {
  QMat q(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

inline QVec to_rational(const IVec& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

inline bool is_integral(const QMat& m) {
  for (const Rat& x : m.a)
    if (x.get_den() != 1) return false;
  return true;
}

inline bool is_integral(const QVec& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

inline IMat to_integer(const QMat& m) {
  IMat z(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    if (m.a[i].get_den() != 1) fail("not_integral", "matrix entry has a denominator");
    z.a[i] = m.a[i].get_num();
  }
  return z;
}

inline IVec to_integer(const QVec& v) {
  IVec z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) fail("not_integral", "vector entry has a denominator");
    z[i] = v[i].get_num();
  }
  return z;
}

}  // namespace lorentz
