#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/exactcore/errors.hpp"
#include "perisplit/exactcore/mpoly.hpp"
#include "perisplit/exactcore/rational.hpp"

namespace perisplit {

/// Dense matrix over an exact commutative ring (Rat, DualRat or MPoly).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
    Matrix s(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = (*this)(r[i], c[j]);
    return s;
  }
  Matrix principal(const std::vector<std::size_t>& idx) const { return submatrix(idx, idx); }

  bool is_skew() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, i).is_zero()) return false;
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
    return true;
  }
  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch in sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch in difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> d;
    d.reserve(data_.size());
    for (const auto& x : data_) d.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(d));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> m(r, c);
  std::size_t i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i0 + i, j0 + j) = b(i, j);
    i0 += b.rows();
    j0 += b.cols();
  }
  return m;
}

namespace detail {

template <class T>
T pfaffian_rec(const Matrix<T>& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1);
  std::size_t first = idx.front();
  T out(0);
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const T& a = m(first, idx[t]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t s = 1; s < idx.size(); ++s)
      if (s != t) rest.push_back(idx[s]);
    T sub = pfaffian_rec(m, rest);
    // idx[t] sits at position t (0-based) so the sign is (-1)^(t+1)
    if (t % 2 == 1) out = out + a * sub;
    else out = out - a * sub;
  }
  return out;
}

}  // namespace detail

/// Pfaffian by expansion along the first row; Pf of a sum of standard
/// 2x2 blocks [[0,1],[-1,0]] is +1.
template <class T>
T pfaffian(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("pfaffian: matrix is not square");
  if (m.rows() % 2) throw std::invalid_argument("pfaffian: odd size");
  if (!m.is_skew()) throw InvariantViolation("Pf(skew)", "pfaffian of a matrix that is not skew-symmetric");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(m, idx);
}

/// Coefficients c_0..c_n of det(uI - M), c_n = 1 (Faddeev-LeVerrier).
template <class T>
std::vector<T> charpoly_coeffs(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("charpoly: matrix is not square");
  std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) = next(i, i) + c[n - k + 1];
    mk = std::move(next);
    Matrix<T> am = a * mk;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr = tr + am(i, i);
    c[n - k] = tr * T(Rat(-1, static_cast<long>(k)));
  }
  return c;
}

template <class T>
T det(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("det: matrix is not square");
  auto c = charpoly_coeffs(a);
  return a.rows() % 2 ? T(0) - c[0] : c[0];
}

/// det(uI - M) as a polynomial; u is appended to the entries' ring.
inline MPoly charpoly(const Matrix<MPoly>& m, const std::string& u = "u") {
  RingPtr base;
  for (const auto& x : m.data())
    if (x.ring()) base = x.ring();
  RingPtr ring = extend_ring(base, {{u, 1}});
  MPoly uu = MPoly::variable(ring, ring->size() - 1);
  auto c = charpoly_coeffs(m);
  MPoly out = MPoly::constant(ring, Rat(0));
  MPoly upow = MPoly::constant(ring, Rat(1));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out += (c[k].ring() ? c[k].rebase(ring) : c[k].lifted(ring)) * upow;
    upow = upow * uu;
  }
  return out;
}

inline MPoly charpoly(const Matrix<Rat>& m, const std::string& u = "u") {
  return charpoly(m.map([](const Rat& x) { return MPoly(x); }), u);
}

/// Row echelon rank over a field.
template <class T>
std::size_t rank(Matrix<T> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Inverse over a field; throws if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("inverse: matrix is not square");
  std::size_t n = a.rows();
  Matrix<T> m = a, inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    T s = T(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = m(c, j) * s;
      inv(c, j) = inv(c, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(c, j);
        inv(i, j) = inv(i, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

/// All k-subsets of {0..n-1} in lex order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

/// All k x k minors (rows and columns in lex order of subsets).
template <class T>
std::vector<T> minors(const Matrix<T>& m, std::size_t k) {
  std::vector<T> out;
  for (const auto& r : subsets(m.rows(), k))
    for (const auto& c : subsets(m.cols(), k)) out.push_back(det(m.submatrix(r, c)));
  return out;
}

/// Pfaffians of all principal 2k x 2k submatrices of a skew matrix.
template <class T>
std::vector<T> sub_pfaffians(const Matrix<T>& m, std::size_t two_k) {
  std::vector<T> out;
  for (const auto& s : subsets(m.rows(), two_k)) out.push_back(pfaffian(m.principal(s)));
  return out;
}

}  // namespace perisplit
