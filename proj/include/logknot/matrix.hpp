#pragma once

#include <vector>

#include "logknot/cyclotomic.hpp"
#include "logknot/numeric.hpp"

namespace logknot {

// Small dense matrix; T is Cyclo or Complex<B>. Default-constructed T is 0.
template <class T>
struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<T> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

  T& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const T& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static DenseMatrix identity_like(int n, const T& one) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& v = x.at(i, k);
        if (is_exact_zero(v)) continue;
        for (int j = 0; j < y.cols; ++j) {
          if (is_exact_zero(y.at(k, j))) continue;
          z.at(i, j) += v * y.at(k, j);
        }
      }
    return z;
  }
  friend DenseMatrix operator+(DenseMatrix x, const DenseMatrix& y) {
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
  }
  friend DenseMatrix operator-(DenseMatrix x, const DenseMatrix& y) {
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
  }
  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline bool is_exact_zero(const Cyclo& v) { return v.is_zero(); }
template <class B>
bool is_exact_zero(const Complex<B>& v) {
  return v.re == 0 && v.im == 0;
}

template <class T>
DenseMatrix<T> scale_matrix(DenseMatrix<T> m, const T& c) {
  for (auto& v : m.a) v = v * c;
  return m;
}

// Kronecker product, first factor slow index.
template <class T>
DenseMatrix<T> kronecker(const DenseMatrix<T>& x, const DenseMatrix<T>& y) {
  DenseMatrix<T> z(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (is_exact_zero(x.at(i, j))) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l) {
          if (is_exact_zero(y.at(k, l))) continue;
          z.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
        }
    }
  return z;
}

template <class B>
B max_abs(const DenseMatrix<Complex<B>>& m) {
  B r(0);
  for (const auto& v : m.a) {
    B a = v.abs();
    if (a > r) r = a;
  }
  return r;
}

// Exact Gaussian inverse; throws DivisionByZero if singular.
inline DenseMatrix<Cyclo> inverse_matrix(DenseMatrix<Cyclo> m) {
  const int n = m.rows;
  auto ring = [&]() -> std::shared_ptr<const CycloRing> {
    for (const auto& v : m.a)
      if (v.ring()) return v.ring();
    throw InvalidParameter("cannot invert an all-zero matrix");
  }();
  Cyclo one = Cyclo::from_rational(ring, BigRat(1));
  DenseMatrix<Cyclo> inv = DenseMatrix<Cyclo>::identity_like(n, one);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DivisionByZero("singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Cyclo pinv = inverse(m.at(col, col));
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      Cyclo f = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Numeric Gaussian inverse with partial pivoting; throws DivisionByZero
// when the pivot falls below `tol` (numerically singular input).
template <class B>
DenseMatrix<Complex<B>> inverse_matrix(DenseMatrix<Complex<B>> m, const B& tol) {
  const int n = m.rows;
  auto inv = DenseMatrix<Complex<B>>::identity_like(n, Complex<B>::one());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    B best = m.at(col, col).abs();
    for (int r = col + 1; r < n; ++r) {
      B a = m.at(r, col).abs();
      if (a > best) {
        best = a;
        piv = r;
      }
    }
    if (best < tol) throw DivisionByZero("numerically singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Complex<B> pinv = Complex<B>::one() / m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Complex<B> f = m.at(r, col);
      if (f.re == 0 && f.im == 0) continue;
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= f * m.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace logknot
