#pragma once

#include <stdexcept>
#include <vector>

#include "perisplit/exactcore/matrix.hpp"
#include "perisplit/splitrings/construct.hpp"

namespace perisplit {

/// Sylvester resultant of p = sum p[k] v^(deg-k) and q likewise (leading coefficient first).
template <class T>
T resultant(const std::vector<T>& p, const std::vector<T>& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("resultant: empty polynomial");
  std::size_t dp = p.size() - 1, dq = q.size() - 1;
  std::size_t s = dp + dq;
  if (s == 0) return T(1);
  Matrix<T> m(s, s);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) m(r, r + k) = p[k];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) m(dq + r, r + k) = q[k];
  return det(m);
}

/// Discriminant of the monic v^n + c[0] v^{n-1} + ... + c[n-1]: (-1)^{n(n-1)/2} Res(f, f').
template <class T>
T monic_discriminant(const std::vector<T>& c) {
  std::size_t n = c.size();
  if (n == 0) return T(1);
  std::vector<T> f{T(1)};
  f.insert(f.end(), c.begin(), c.end());
  std::vector<T> d;
  for (std::size_t k = 0; k < n; ++k) d.push_back(f[k] * T(Rat(static_cast<long>(n - k))));
  T r = resultant(f, d);
  return (n * (n - 1) / 2) % 2 ? T(0) - r : r;
}

struct Discriminants {
  MPoly delta;        // 4^n a_2n disc(f~)
  MPoly delta_tilde;  // disc(f~), f~(u^2) = f(u)
};

/// Both discriminants in the base coefficients.
inline Discriminants discriminant(const EvenMonicPoly& f) {
  MPoly dt = monic_discriminant(f.a);
  MPoly four_n = MPoly(pow(Rat(4), static_cast<unsigned>(f.n())));
  return {four_n * f.coeff(f.n()) * dt, dt};
}

/// (-4)^n alpha disc(f~); with alpha^2 = (-1)^n a_2n this satisfies alpha * reduced = delta.
inline MPoly reduced_discriminant(const EvenMonicPoly& f) {
  if (!f.alpha) throw std::invalid_argument("reduced_discriminant: alpha missing");
  Rat c = pow(Rat(-4), static_cast<unsigned>(f.n()));
  return MPoly(c) * *f.alpha * monic_discriminant(f.a);
}

/// The same quantities for numeric coefficient lists (a_2, ..., a_2n), e.g. over dual numbers.
template <class T>
T delta_of(const std::vector<T>& a) {
  return T(pow(Rat(4), static_cast<unsigned>(a.size()))) * a.back() * monic_discriminant(a);
}
template <class T>
T reduced_delta_of(const std::vector<T>& a, const T& alpha) {
  return T(pow(Rat(-4), static_cast<unsigned>(a.size()))) * alpha * monic_discriminant(a);
}

}  // namespace perisplit
