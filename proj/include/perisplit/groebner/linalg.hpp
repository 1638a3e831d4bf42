#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "perisplit/exactcore/matrix.hpp"
#include "perisplit/exactcore/rational.hpp"

namespace perisplit {

/// Sparse row: (column, value) pairs with strictly increasing columns.
template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

/// Incremental row echelon form over Q; rows are kept monic at their pivot.
class RationalEchelon {
 public:
  /// Returns true when the row was independent of the rows already inserted.
  bool insert(SparseRow<Rat> row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        Rat inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      row = axpy(row, it->second, -row.front().second);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  // a + c*b
  static SparseRow<Rat> axpy(const SparseRow<Rat>& a, const SparseRow<Rat>& b, const Rat& c) {
    SparseRow<Rat> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, c * b[j].second);
        ++j;
      } else {
        Rat v = a[i].second + c * b[j].second;
        if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::size_t, SparseRow<Rat>> pivots_;
};

namespace modp {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }
inline std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return power(a, kPrime - 2); }

/// Image of a rational; false when p divides the denominator.
inline bool reduce(const Rat& q, std::uint64_t& out) {
  mpz_class p(static_cast<unsigned long>(kPrime));
  mpz_class d = q.raw().get_den() % p;
  if (d == 0) return false;
  mpz_class n = q.raw().get_num() % p;
  if (n < 0) n += p;
  out = mul(n.get_ui(), inv(d.get_ui()));
  return true;
}

}  // namespace modp

/// Rank over GF(2^31 - 1). It never exceeds the rank over Q whenever every entry reduces.
/// Returns -1 when some denominator vanishes mod p.
inline long rank_mod_p(const std::vector<SparseRow<Rat>>& rows) {
  std::map<std::size_t, SparseRow<std::uint64_t>> piv;
  for (const auto& r0 : rows) {
    SparseRow<std::uint64_t> row;
    for (const auto& [c, v] : r0) {
      std::uint64_t x;
      if (!modp::reduce(v, x)) return -1;
      if (x) row.emplace_back(c, x);
    }
    while (!row.empty()) {
      auto it = piv.find(row.front().first);
      if (it == piv.end()) {
        std::uint64_t inv = modp::inv(row.front().second);
        for (auto& e : row) e.second = modp::mul(e.second, inv);
        piv.emplace(row.front().first, std::move(row));
        break;
      }
      std::uint64_t c = modp::kPrime - row.front().second;
      const auto& b = it->second;
      SparseRow<std::uint64_t> out;
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < b.size()) {
        if (j == b.size() || (i < row.size() && row[i].first < b[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || b[j].first < row[i].first) {
          out.emplace_back(b[j].first, modp::mul(c, b[j].second));
          ++j;
        } else {
          std::uint64_t v = (row[i].second + modp::mul(c, b[j].second)) % modp::kPrime;
          if (v) out.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return static_cast<long>(piv.size());
}

/// Exact rank over Q. A full-rank answer mod p is accepted directly since it cannot overshoot.
inline std::size_t sparse_rank(std::vector<SparseRow<Rat>> rows, std::size_t ncols) {
  if (rows.empty() || ncols == 0) return 0;
  long fast = rank_mod_p(rows);
  if (fast >= 0 && static_cast<std::size_t>(fast) == std::min(rows.size(), ncols)) return static_cast<std::size_t>(fast);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  RationalEchelon ech;
  for (auto& r : rows) ech.insert(std::move(r));
  return ech.rank();
}

/// Basis of {x : A x = 0} over Q, one vector per free column of the reduced echelon form.
inline std::vector<std::vector<Rat>> nullspace(const Matrix<Rat>& a) {
  std::size_t m = a.rows(), n = a.cols();
  Matrix<Rat> r = a;
  std::vector<std::size_t> pivcol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && r(p, c).is_zero()) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t k = 0; k < n; ++k) std::swap(r(p, k), r(row, k));
    Rat inv = r(row, c).inverse();
    for (std::size_t k = c; k < n; ++k) r(row, k) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || r(i, c).is_zero()) continue;
      Rat f = r(i, c);
      for (std::size_t k = c; k < n; ++k) r(i, k) -= f * r(row, k);
    }
    pivcol.push_back(c);
    ++row;
  }
  std::vector<bool> is_piv(n, false);
  for (auto c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Rat>> out;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_piv[fcol]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[fcol] = Rat(1);
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -r(i, fcol);
    out.push_back(std::move(v));
  }
  return out;
}

/// Scale a rational vector to a primitive integer vector with positive first nonzero entry.
inline std::vector<long> primitive_integer(const std::vector<Rat>& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (!x.is_zero()) l = lcm(l, mpz_class(x.raw().get_den()));
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class t = x.raw().get_num() * (l / x.raw().get_den());
    g = gcd(g, t);
    z.push_back(t);
  }
  std::vector<long> out;
  int s = 0;
  for (auto& t : z) {
    if (g != 0) t /= g;
    if (!s && t != 0) s = t > 0 ? 1 : -1;
  }
  for (auto& t : z) out.push_back(s < 0 ? -t.get_si() : t.get_si());
  return out;
}

}  // namespace perisplit
