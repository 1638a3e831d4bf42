#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "perisplit/detvar/chi.hpp"

namespace perisplit {

namespace sample_detail {

// Portable draws: only the raw mt19937_64 stream is used, never a distribution.
struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  long integer(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rat rat() { return Rat(integer(-5, 5), integer(1, 3)); }
  Rat nonzero() {
    long v = integer(1, 5) * (integer(0, 1) ? 1 : -1);
    return Rat(v, integer(1, 3));
  }
};

// 2k x 2k skew matrix, zero above the antidiagonal, antidiagonal a_1..a_k, -a_k..-a_1.
inline Matrix<Rat> lower_antidiagonal_skew(const std::vector<Rat>& a, Draw& d) {
  std::size_t m = 2 * a.size();
  Matrix<Rat> x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (i + j < m - 1) continue;
      Rat v = i + j == m - 1 ? a[i] : d.rat();
      x(i, j) = v;
      x(j, i) = -v;
    }
  return x;
}

// 2k x 2k symmetric matrix, zero below the antidiagonal, antidiagonal d_1..d_k, d_k..d_1.
inline Matrix<Rat> upper_antidiagonal_symmetric(const std::vector<Rat>& dd, Draw& d) {
  std::size_t m = 2 * dd.size();
  Matrix<Rat> x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      if (i + j > m - 1) continue;
      Rat v = i + j == m - 1 ? dd[i] : d.rat();
      x(i, j) = v;
      x(j, i) = v;
    }
  return x;
}

inline Matrix<Rat> random_skew(std::size_t m, Draw& d) {
  Matrix<Rat> x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      x(i, j) = d.rat();
      x(j, i) = -x(i, j);
    }
  return x;
}

inline Matrix<Rat> random_symmetric(std::size_t m, Draw& d) {
  Matrix<Rat> x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      x(i, j) = d.rat();
      x(j, i) = x(i, j);
    }
  return x;
}

inline Matrix<Rat> random_matrix(std::size_t rows, std::size_t cols, Draw& d) {
  Matrix<Rat> x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = d.rat();
  return x;
}

inline Matrix<Rat> random_invertible(std::size_t n, Draw& d) {
  while (true) {
    Matrix<Rat> x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = Rat(d.integer(-2, 2));
    if (!det(x).is_zero()) return x;
  }
}

// Place src at (r0, c0) inside dst.
inline void put(Matrix<Rat>& dst, const Matrix<Rat>& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

}  // namespace sample_detail

/// Number of eigenvalue parameters: n - r when 2r > n, r otherwise.
inline int eigen_count(int n, int r) { return 2 * r > n ? n - r : r; }

/// A point of Z whose chibar has roots +-eigen[i], built from the block normal form
/// (antidiagonal products a_i d_i = eigen[i], random free blocks) and then moved by a
/// random change of basis gamma: f -> gamma^T f gamma, g -> gamma^-1 g gamma^-T.
inline ZPoint sample_Z_point(int n, int r, const std::vector<Rat>& eigen, std::uint64_t seed) {
  using namespace sample_detail;
  check_nr(n, r);
  if (static_cast<int>(eigen.size()) != eigen_count(n, r))
    throw std::invalid_argument("sample_Z_point: expected " + std::to_string(eigen_count(n, r)) + " eigenvalues");
  Draw d(seed);
  std::vector<Rat> a, dd;
  for (const auto& l : eigen) {
    a.push_back(d.nonzero());
    dd.push_back(l / a.back());
  }
  const std::size_t N = static_cast<std::size_t>(n);
  ZPoint p;
  p.n = n;
  p.r = r;
  p.f = Matrix<Rat>(N, N);
  p.g = Matrix<Rat>(N, N);
  Matrix<Rat> A = lower_antidiagonal_skew(a, d), D = upper_antidiagonal_symmetric(dd, d);
  if (2 * r > n) {
    std::size_t z = static_cast<std::size_t>(2 * r - n), k2 = A.rows();
    put(p.f, A, z, z);
    Matrix<Rat> C = random_matrix(z, k2, d);
    put(p.g, random_symmetric(z, d), 0, 0);
    put(p.g, C, 0, z);
    put(p.g, C.transpose(), z, 0);
    put(p.g, D, z, z);
  } else {
    std::size_t m = A.rows(), rest = N - m, rr = static_cast<std::size_t>(r);
    Matrix<Rat> B = random_matrix(m, rest, d);
    put(p.f, A, 0, 0);
    put(p.f, B, 0, m);
    put(p.f, B.transpose().map([](const Rat& x) { return -x; }), m, 0);
    put(p.f, random_skew(rest, d), m, m);
    put(p.g, D, 0, 0);
    if (r > 0) {
      // D = psi J psi^T with psi = [[D1/2, I], [D2^T, 0]].
      Matrix<Rat> phi(N, m);
      for (std::size_t i = 0; i < rr; ++i) {
        for (std::size_t j = 0; j < rr; ++j) {
          phi(i, j) = D(i, j) * Rat(1, 2);
          phi(rr + i, j) = D(j, rr + i);
        }
        phi(i, rr + i) = Rat(1);
      }
      p.phi = phi;
    }
  }
  Matrix<Rat> gamma = random_invertible(N, d), gi = inverse(gamma);
  p.f = gamma.transpose() * p.f * gamma;
  p.g = gi * p.g * gi.transpose();
  if (p.phi) {
    p.phi = gi * *p.phi;
    p.plucker = maximal_minors(*p.phi);
  }
  return p;
}

}  // namespace perisplit
