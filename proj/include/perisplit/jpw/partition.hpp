#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace perisplit {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i && p[i] > p[i - 1])) return false;
  return true;
}

inline void check_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition: parts must be positive and weakly decreasing");
}

inline Partition transpose(const Partition& p) {
  check_partition(p);
  Partition t(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (int x : p)
    for (int c = 0; c < x; ++c) ++t[static_cast<std::size_t>(c)];
  return t;
}

/// (b + alpha_1, ..., b + alpha_b, b repeated a times, alpha^T).
inline Partition P_partition(int a, int b, const Partition& alpha) {
  check_partition(alpha);
  if (a < 0 || b < 0) throw std::invalid_argument("P_partition: a and b must be nonnegative");
  if (static_cast<int>(alpha.size()) > b)
    throw std::invalid_argument("P_partition: length of alpha exceeds b");
  Partition out;
  for (int i = 0; i < b; ++i) out.push_back(b + (i < static_cast<int>(alpha.size()) ? alpha[static_cast<std::size_t>(i)] : 0));
  for (int i = 0; i < a && b > 0; ++i) out.push_back(b);
  for (int x : transpose(alpha)) out.push_back(x);
  return out;
}

/// dim S_lambda of an n-dimensional space by the hook-content formula.
inline mpz_class schur_dim(const Partition& p, int n) {
  check_partition(p);
  if (static_cast<int>(p.size()) > n) return 0;
  Partition t = transpose(p);
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      num *= n + j - static_cast<int>(i);
      den *= (p[i] - j - 1) + (t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  return num / den;
}

/// Partitions with at most max_len parts, each at most max_part, in lex order of the parts vector.
inline std::vector<Partition> partitions_in_box(int max_len, int max_part) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int cap) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int x = 1; x <= cap; ++x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  if (max_len >= 0 && max_part >= 0) rec(rec, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

/// Partitions of s into distinct parts, parts decreasing.
inline std::vector<Partition> strict_partitions(int s) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      self(self, left - x, x - 1);
      cur.pop_back();
    }
  };
  rec(rec, s, s);
  return out;
}

/// The partition with Frobenius coordinates (arms | legs).
inline Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
  if (arms.size() != legs.size()) throw std::invalid_argument("from_frobenius: unequal lengths");
  std::size_t s = arms.size();
  Partition out;
  for (std::size_t i = 0; i < s; ++i) out.push_back(arms[i] + static_cast<int>(i) + 1);
  int depth = s ? legs[0] + 1 : 0;
  for (int row = static_cast<int>(s) + 1; row <= depth; ++row) {
    int c = 0;
    for (std::size_t t = 0; t < s; ++t)
      if (legs[t] + static_cast<int>(t) + 1 >= row) ++c;
    out.push_back(c);
  }
  check_partition(out);
  return out;
}

inline std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace perisplit
