#include <gtest/gtest.h>

#include <fstream>

#include "oracle.hpp"
#include "perisplit/jpw/oracle.hpp"

using namespace perisplit;

namespace {

// Semistandard tableaux of shape p with entries 1..n, counted cell by cell in row order.
long ssyt_count(const Partition& p, int n) {
  std::vector<std::vector<int>> t;
  for (int x : p) t.emplace_back(static_cast<std::size_t>(x), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) cells.emplace_back(i, j);
  long count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (j) lo = std::max(lo, t[i][j - 1]);
    if (i) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= n; ++v) {
      t[i][j] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

std::map<std::pair<int, int>, unsigned long long> golden(int n, int r) {
  std::ifstream in(std::string(PERISPLIT_GOLDEN_DIR) + "/betti_" + std::to_string(n) + "_" + std::to_string(r) + ".json");
  EXPECT_TRUE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("n").get<int>(), n);
  EXPECT_EQ(j.at("r").get<int>(), r);
  return BettiTable::from_json(j).entries();
}

struct AcceptancePair {
  int n, r, max_i, max_j;
};
const std::vector<AcceptancePair> kPairs{{4, 3, 2, 4}, {5, 4, 3, 6}, {3, 1, 2, 6}, {4, 1, 2, 6}};

}  // namespace

TEST(Partition, Transpose) {
  EXPECT_EQ(transpose({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(transpose({}), Partition{});
  EXPECT_EQ(transpose({2, 2}), (Partition{2, 2}));
  for (const auto& p : partitions_in_box(5, 5)) {
    EXPECT_EQ(transpose(transpose(p)), p);
    EXPECT_EQ(partition_size(transpose(p)), partition_size(p));
  }
  EXPECT_THROW(transpose({1, 2}), std::invalid_argument);
}

TEST(Partition, PFamilyExamples) {
  EXPECT_EQ(P_partition(3, 1, {}), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(P_partition(3, 1, {1}), (Partition{2, 1, 1, 1, 1}));
  EXPECT_EQ(P_partition(1, 2, {1}), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(P_partition(0, 0, {}), Partition{});
  EXPECT_THROW(P_partition(3, 1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(P_partition(-1, 1, {}), std::invalid_argument);
}

TEST(Partition, PFamilySizeAndShape) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& alpha : partitions_in_box(b, 4)) {
        Partition p = P_partition(a, b, alpha);
        ASSERT_TRUE(is_partition(p));
        int al = partition_size(alpha);
        ASSERT_EQ(partition_size(p), 2 * al + b * b + a * b);
        if (alpha.empty() && b > 0) EXPECT_EQ(p, Partition(static_cast<std::size_t>(a + b), b));
      }
}

TEST(Partition, SchurDimensions) {
  EXPECT_EQ(schur_dim({1}, 7), 7);
  EXPECT_EQ(schur_dim({1, 1, 1, 1}, 5), 5);
  EXPECT_EQ(schur_dim({2, 1, 1, 1, 1}, 5), 5);
  EXPECT_EQ(schur_dim({}, 3), 1);
  EXPECT_EQ(schur_dim({1, 1, 1}, 2), 0);
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : partitions_in_box(4, 3))
      ASSERT_EQ(schur_dim(p, n), ssyt_count(p, n)) << partition_to_string(p) << " n=" << n;
}

TEST(Partition, Frobenius) {
  EXPECT_EQ(from_frobenius({1}, {2}), (Partition{2, 1, 1}));
  EXPECT_EQ(from_frobenius({2}, {1}), (Partition{3, 1}));
  EXPECT_EQ(from_frobenius({0}, {0}), Partition{1});
  EXPECT_EQ(from_frobenius({3, 1}, {2, 0}), (Partition{4, 3, 1}));
  EXPECT_EQ(strict_partitions(5).size(), 3u);
}

TEST(LModule, Examples) {
  auto l = L_module(4, 3, 1);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].rep.parts, (Partition{1, 1, 1, 1}));
  EXPECT_FALSE(l[0].rep.dual);
  EXPECT_EQ(l[0].i, 1);
  EXPECT_EQ(l[0].j, 2);
  auto m = L_module(3, 1, 1);
  ASSERT_EQ(m.size(), 2u);  // k = br: b = 1 with alpha = () and (1)
  EXPECT_EQ(m[0].rep.parts, (Partition{1, 1}));
  EXPECT_TRUE(m[0].rep.dual);
  EXPECT_EQ(schur_dim(m[0].rep.parts, 3), 3);
  EXPECT_EQ(m[0].i, 0);
  EXPECT_EQ(m[0].j, 1);
  // k is a multiple of n - r (2r > n) or r (2r <= n)
  EXPECT_TRUE(L_module(7, 5, 1).empty());
  EXPECT_TRUE(L_module(7, 2, 3).empty());
  EXPECT_FALSE(L_module(7, 2, 4).empty());
  for (const auto& s : L_module(5, 4, 2)) EXPECT_EQ(s.j - s.i, 2);
}

TEST(LModule, GradingInvariants) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& s : L_all(n, r)) {
        int a = jpw_a(n, r), al = partition_size(s.alpha);
        ASSERT_EQ(s.rep.parts, P_partition(a, s.b, s.alpha));
        ASSERT_EQ(2 * s.j, partition_size(s.rep.parts));
        ASSERT_LE(static_cast<int>(s.rep.parts.size()), n);
        ASSERT_EQ(s.i, 2 * r > n ? al + s.b * (s.b + 1) / 2 : al + s.b * (s.b - 1) / 2);
        ASSERT_EQ(s.rep.multiplicity, 1);
        ASSERT_EQ(s.rep.dual, 2 * r <= n);
      }
}

TEST(LModule, TruncationIsComplete) {
  // Every P(a, b, alpha) with l(P) <= n appears, checked against a wide search.
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      std::set<Partition> got;
      for (const auto& s : L_all(n, r)) got.insert(s.rep.parts);
      std::set<Partition> want;
      int a = jpw_a(n, r);
      for (int b = 0; b <= 8; ++b)
        for (const auto& alpha : partitions_in_box(b, 8)) {
          Partition p = P_partition(a, b, alpha);
          if (static_cast<int>(p.size()) <= n) want.insert(p);
        }
      EXPECT_EQ(got, want) << n << "," << r;
    }
}

TEST(BettiJpw, KnownTables) {
  auto t = betti_table_jpw(5, 4, 3, 6);
  EXPECT_EQ(t.entries(), (std::map<std::pair<int, int>, unsigned long long>{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}}));
  auto u = betti_table_jpw(4, 3, 2, 4);
  EXPECT_EQ(u.entries(), (std::map<std::pair<int, int>, unsigned long long>{{{0, 0}, 1}, {{1, 2}, 1}}));
  auto v = betti_table_jpw(3, 1, 2, 6);
  EXPECT_EQ(v.at(0, 0), 1u);
  EXPECT_EQ(v.at(0, 1), 3u);
  EXPECT_EQ(v.at(1, 2), 3u);
  EXPECT_EQ(v.at(1, 3), 1u);
  // labels ride along
  ASSERT_EQ(t.labels().at({1, 2}).size(), 1u);
  EXPECT_EQ(t.labels().at({1, 2})[0].to_string(), "S(1,1,1,1)V");
}

TEST(BettiJpw, GoldenFiles) {
  for (const auto& p : kPairs) EXPECT_EQ(betti_table_jpw(p.n, p.r, p.max_i, p.max_j).entries(), golden(p.n, p.r)) << p.n << "," << p.r;
}

TEST(BettiJpw, KoszulOracleAgreement) {
  for (const auto& p : kPairs) {
    auto d = jpw_oracle_diff(p.n, p.r, p.max_i, p.max_j);
    EXPECT_TRUE(d.empty()) << p.n << "," << p.r << ": " << (d.empty() ? "" : d[0]);
  }
}

TEST(BettiJpw, KoszulOracleAgreementForOZ) {
  // O_Z is the even-b part when 2r <= n.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    auto d = jpw_oracle_diff(n, r, 3, 6, JpwRing::Z);
    EXPECT_TRUE(d.empty()) << n << "," << r << ": " << (d.empty() ? "" : d[0]);
  }
  EXPECT_EQ(betti_table_jpw(4, 1, 3, 6, JpwRing::Z).at(3, 5), 6u);
  EXPECT_EQ(betti_table_jpw(5, 4, 3, 6, JpwRing::Z), betti_table_jpw(5, 4, 3, 6));
}

TEST(BettiJpw, EulerMatchesHilbertSeries) {
  const int J = 8;
  // Pfaffian ideals: Hilbert series from a Groebner basis.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 4}}) {
    auto m = jpw_oracle_module(n, r);
    auto h = hilbert_series(m.ideal).expand(J);
    auto e = hilbert_from_betti(betti_table_jpw(n, r, J, J), m.nvars, J);
    for (int j = 0; j <= J; ++j) EXPECT_EQ(e[static_cast<std::size_t>(j)], h[static_cast<std::size_t>(j)]) << n << "," << r << " j=" << j;
  }
  // O_Z for (4, 1): symmetric minors.
  {
    auto m = jpw_oracle_module(4, 1, JpwRing::Z);
    auto h = hilbert_series(m.ideal).expand(J);
    auto e = hilbert_from_betti(betti_table_jpw(4, 1, J, J, JpwRing::Z), m.nvars, J);
    for (int j = 0; j <= J; ++j) EXPECT_EQ(e[static_cast<std::size_t>(j)], h[static_cast<std::size_t>(j)]) << "Z j=" << j;
  }
  // O_Z': dimensions of the image of the parametrization.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}}) {
    auto z = z_prime_ideal(n, r);
    int nv = n * (n + 1) / 2;
    auto e = hilbert_from_betti(betti_table_jpw(n, r, J, J), nv, J);
    ASSERT_GE(z.hilbert.size(), 5u);
    for (std::size_t j = 0; j < z.hilbert.size(); ++j) EXPECT_EQ(e[j], static_cast<unsigned long>(z.hilbert[j])) << n << "," << r << " j=" << j;
    // torus invariants: binomial(j + n - 1, n - 1)^2
    for (int j = 0; j <= J; ++j) {
      long c = oracle::binomial(j + n - 1, n - 1);
      EXPECT_EQ(e[static_cast<std::size_t>(j)], c * c) << n << "," << r << " j=" << j;
    }
  }
}

TEST(BettiJpw, BoundaryCases) {
  for (int n = 1; n <= 6; ++n) {
    int s = n * (n - 1) / 2, t = n * (n + 1) / 2;
    auto top = betti_table_jpw(n, n, t, t), bottom = betti_table_jpw(n, 0, t, t);
    for (int j = 0; j <= t; ++j) {
      EXPECT_EQ(top.at(j, j), j <= s ? static_cast<unsigned long long>(oracle::binomial(s, j)) : 0ULL) << n << " j=" << j;
      EXPECT_EQ(bottom.at(j, j), static_cast<unsigned long long>(oracle::binomial(t, j))) << n << " j=" << j;
    }
    EXPECT_EQ(top.entries().size(), static_cast<std::size_t>(s + 1));
    // all of it sits in L_0
    EXPECT_EQ(L_module(n, n, 0).size(), L_all(n, n).size());
    EXPECT_TRUE(L_module(n, 0, 1).empty());
    std::set<PartitionRep> labels;
    for (const auto& x : L_all(n, 0)) EXPECT_TRUE(labels.insert(x.rep).second);
  }
}

TEST(APoincare, Examples) {
  EXPECT_EQ(A_poincare(3, 2), (IntPoly{1, 0, 1}));
  EXPECT_EQ(A_poincare(4, 1), (IntPoly{1}));
  EXPECT_EQ(A_poincare(5, 4), (IntPoly{1, 0, 1}));
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      mpz_class total = 0;
      for (const auto& c : A_poincare(n, r)) total += c;
      EXPECT_EQ(total, static_cast<unsigned long>(s1_rank(n, r))) << n << "," << r;
      for (std::size_t d = 1; d < A_poincare(n, r).size(); d += 2) EXPECT_EQ(A_poincare(n, r)[d], 0);
    }
  EXPECT_EQ(s0_rank(5, 4), 2u);
  EXPECT_EQ(s0_rank(5, 3), 8u);
  EXPECT_EQ(s0_rank(6, 3), 24u);
  EXPECT_EQ(s1_rank(6, 3), 4u);
  EXPECT_THROW(A_poincare(3, 3), std::invalid_argument);
}

TEST(Cohomology, PrincipalPfaffianCase) {
  auto c = cohomology_series(4, 3, 6, 10);
  EXPECT_EQ(c.E_series.at(0).at(0), 1u);
  EXPECT_EQ(c.E_series.at(1).at(2), 1u);
  EXPECT_EQ(c.E_series.size(), 2u);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(c.H_total(k), 1u) << k;
  EXPECT_EQ(c.H_total(4), 0u);
  EXPECT_EQ(c.E_series, c.E_series_Z);
  EXPECT_TRUE(c.multiplicity.ok);
  EXPECT_EQ(c.s1, 2u);
}

TEST(Cohomology, SmallCases) {
  auto c = cohomology_series(3, 2, 6, 10);
  EXPECT_EQ(c.H_total(0), 1u);
  EXPECT_EQ(c.H_total(2), 1u);
  EXPECT_EQ(c.H_total(1), 0u);
  // 2r <= n: Z and Z' differ exactly by the odd-b summands
  auto d = cohomology_series(4, 1, 6, 10);
  EXPECT_EQ(d.E_series.at(1).at(1), 6u);
  EXPECT_FALSE(d.E_series_Z.count(1));
  EXPECT_NE(d.E_series, d.E_series_Z);
  EXPECT_THROW(cohomology_series(3, 0, 4, 4), std::invalid_argument);
  EXPECT_THROW(cohomology_series(3, 3, 4, 4), std::invalid_argument);
}

TEST(Cohomology, HIsConvolution) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 3}, {6, 4}, {6, 2}}) {
    auto c = cohomology_series(n, r, 12, 30);
    const auto& A = c.A_poincare;
    for (int k = 0; k <= 12; ++k) {
      unsigned long long want = 0;
      for (std::size_t d = 0; d < A.size() && static_cast<int>(d) <= k; ++d) {
        auto it = c.E_series.find(k - static_cast<int>(d));
        if (it == c.E_series.end()) continue;
        for (const auto& [j, dim] : it->second) want += A[d].get_ui() * dim;
      }
      EXPECT_EQ(c.H_total(k), want) << n << "," << r << " k=" << k;
    }
  }
}

TEST(Multiplicity, FreeForAcceptancePairs) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 4}, {3, 1}, {4, 1}, {3, 2}, {5, 2}, {6, 3}, {6, 4}}) {
    auto m = multiplicity_free_check(n, r, 6);
    EXPECT_TRUE(m.ok) << n << "," << r << ": " << m.violation;
  }
}
