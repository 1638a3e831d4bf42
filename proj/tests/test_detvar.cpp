#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "perisplit/detvar/probe.hpp"
#include "perisplit/detvar/sample.hpp"
#include "perisplit/detvar/zprime.hpp"

using namespace perisplit;

namespace {

Matrix<Rat> rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v(rows.begin(), rows.end());
  Matrix<Rat> m(v.size(), v.empty() ? 0 : v[0].size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = Rat(x);
    ++i;
  }
  return m;
}

// prod (u^2 - l^2), constant first.
std::vector<Rat> even_product(const std::vector<Rat>& lambda) {
  std::vector<Rat> c{Rat(1)};
  for (const auto& l : lambda) {
    std::vector<Rat> next(c.size() + 2, Rat(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 2] += c[k];
      next[k] -= c[k] * l * l;
    }
    c = next;
  }
  return c;
}

template <class T>
T horner(const std::vector<T>& c, const T& x) {
  T out(0);
  for (std::size_t k = c.size(); k-- > 0;) out = out * x + c[k];
  return out;
}

// Skew matrix of exact rank 2k from k random rank-two pieces u v^T - v u^T.
Matrix<Rat> skew_of_rank(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  Matrix<Rat> m(n, n);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rat> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = oracle::random_rat(rng);
      v[i] = oracle::random_rat(rng);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += u[i] * v[j] - v[i] * u[j];
  }
  return m;
}

const std::vector<std::pair<int, int>> kPhiPairs{{3, 1}, {4, 1}, {4, 2}, {5, 2}};
const std::vector<std::pair<int, int>> kAllPairs{{3, 1}, {4, 1}, {4, 2}, {5, 2}, {3, 2}, {4, 3}, {5, 3}};

std::vector<Rat> eigen_for(int n, int r, std::uint64_t seed) {
  // distinct squares, sometimes a zero
  std::vector<Rat> out;
  for (int i = 0; i < eigen_count(n, r); ++i) out.push_back(Rat(static_cast<long>((seed + 2 * i) % 7) - 1, 1 + i));
  return out;
}

}  // namespace

TEST(ChiBar, SmallExamples) {
  auto f = rat_matrix({{0, 1}, {-1, 0}});
  auto g = rat_matrix({{1, 0}, {0, 0}});
  EXPECT_EQ(chi_bar_coeffs(f, g, 1), (std::vector<Rat>{Rat(0), Rat(0), Rat(1)}));
  EXPECT_EQ(chi_bar(f, g, 1).to_string(), "u^2");
  // (f, 0): chibar = u^(2(n-r)) or u^(2r)
  for (auto [n, r] : kAllPairs) {
    std::mt19937_64 rng(n * 10 + r);
    Matrix<Rat> fz = skew_of_rank(static_cast<std::size_t>(n), static_cast<std::size_t>(std::min(n / 2, n - r)), rng);
    auto c = chi_bar_coeffs(fz, Matrix<Rat>(n, n), r);
    std::size_t deg = static_cast<std::size_t>(2 * std::min(n - r, r));
    ASSERT_EQ(c.size(), deg + 1);
    for (std::size_t k = 0; k < deg; ++k) EXPECT_TRUE(c[k].is_zero());
    EXPECT_TRUE(c[deg].is_one());
  }
}

TEST(ChiBar, OffZRaises) {
  std::mt19937_64 rng(5);
  Matrix<Rat> f = skew_of_rank(4, 2, rng);
  Matrix<Rat> g(4, 4);
  for (std::size_t i = 0; i < 4; ++i) g(i, i) = Rat(static_cast<long>(i) + 1);
  // r = 1 needs u^2 | charpoly, but f and g are invertible
  EXPECT_THROW(chi_bar_coeffs(f, g, 1), InvariantViolation);
}

TEST(ChiBar, GenericModuloZ) {
  // The symbolic check exercises divisibility and evenness in the coordinate ring of Z.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}, {4, 1}}) {
    auto c = chi_bar_generic(n, r);
    EXPECT_EQ(static_cast<int>(c.size()), 2 * std::min(n - r, r) + 1) << n << "," << r;
  }
}

TEST(ZIdeal, GeneratorCounts) {
  EXPECT_TRUE(z_ideal(generic_pair(4, 2)).generators.empty());
  EXPECT_EQ(z_ideal(generic_pair(4, 3)).generators.size(), 1u);   // Pf(f)
  EXPECT_EQ(z_ideal(generic_pair(5, 4)).generators.size(), 5u);   // 4 x 4 Pfaffians
  EXPECT_EQ(z_ideal(generic_pair(3, 1)).generators.size(), 1u);   // det g
  EXPECT_EQ(z_ideal(generic_pair(4, 1)).generators.size(), 10u);  // 3 x 3 minors of symmetric g
  for (const auto& g : z_ideal(generic_pair(5, 1)).generators) EXPECT_TRUE(g.is_homogeneous());
}

TEST(Sample, PointsLieOnZWithPrescribedRoots) {
  for (auto [n, r] : kAllPairs)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto eig = eigen_for(n, r, seed);
      ZPoint p = sample_Z_point(n, r, eig, seed);
      ASSERT_EQ(z_membership_failure(p), "") << n << "," << r << " seed " << seed;
      auto c = chi_bar_coeffs(p.f, p.g, r);
      ASSERT_EQ(c, even_product(eig)) << n << "," << r << " seed " << seed;
      // independent charpoly: det(uI - fg) by Leibniz at two values of u
      Matrix<Rat> fg = p.f * p.g;
      for (long u0 : {2L, -3L}) {
        Matrix<Rat> m = fg.map([](const Rat& x) { return -x; });
        for (int i = 0; i < n; ++i) m(i, i) += Rat(u0);
        Rat shift = pow(Rat(u0), static_cast<unsigned>(chi_shift(n, r)));
        ASSERT_EQ(oracle::det_leibniz(m), shift * horner(c, Rat(u0)));
      }
    }
}

TEST(Sample, SamplingIsDeterministic) {
  auto a = sample_Z_point(5, 2, {Rat(2), Rat(3)}, 42);
  auto b = sample_Z_point(5, 2, {Rat(2), Rat(3)}, 42);
  EXPECT_TRUE(a.f == b.f && a.g == b.g && *a.plucker == *b.plucker);
  auto c = sample_Z_point(5, 2, {Rat(2), Rat(3)}, 43);
  EXPECT_FALSE(a.f == c.f);
  EXPECT_THROW(sample_Z_point(5, 2, {Rat(2)}, 1), std::invalid_argument);
}

TEST(Sample, WorkedExamples) {
  auto p = sample_Z_point(5, 3, {Rat(2), Rat(3)}, 7);
  EXPECT_EQ(chi_bar_coeffs(p.f, p.g, 3), even_product({Rat(2), Rat(3)}));
  auto q = sample_Z_point(3, 1, {Rat(5)}, 7);
  EXPECT_EQ(chi_bar(q.f, q.g, 1).to_string(), "u^2 - 25");
  EXPECT_TRUE(verify_phi_chi(q).holds);
  auto z = sample_Z_point(4, 2, {Rat(0), Rat(0)}, 3);
  EXPECT_EQ(chi_bar(z.f, z.g, 2).to_string(), "u^4");
}

TEST(PhiChi, HundredSeedsPerPair) {
  for (auto [n, r] : kPhiPairs)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto eig = eigen_for(n, r, seed);
      ZPoint p = sample_Z_point(n, r, eig, seed);
      auto rep = verify_phi_chi(p);
      ASSERT_TRUE(rep.holds) << n << "," << r << " seed " << seed;
      // Phi = +-prod(lambda) from the normal form
      Rat prod(1);
      for (const auto& l : eig) prod *= l;
      ASSERT_TRUE(rep.phi == prod || rep.phi == -prod);
      // the witness and the Plucker vector give the same Phi
      ASSERT_EQ(phi_invariant(*p.phi, p.f), rep.phi);
    }
}

TEST(PhiChi, WitnessRequired) {
  ZPoint p = sample_Z_point(5, 3, {Rat(1), Rat(2)}, 1);
  EXPECT_THROW(verify_phi_chi(p), std::invalid_argument);
  ZPoint q = sample_Z_point(4, 1, {Rat(1)}, 1);
  q.phi.reset();
  q.plucker.reset();
  EXPECT_THROW(verify_phi_chi(q), std::invalid_argument);
}

TEST(Phi, WitnessExampleAndZero) {
  // n = 2r: Phi = Pf(f) det(phi)
  std::mt19937_64 rng(9);
  Matrix<Rat> f = skew_of_rank(4, 2, rng), phi(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) phi(i, j) = oracle::random_rat(rng);
  EXPECT_EQ(phi_invariant(phi, f), pfaffian(f) * oracle::det_leibniz(phi));
  EXPECT_TRUE(phi_invariant(phi, Matrix<Rat>(4, 4)).is_zero());
  EXPECT_THROW(phi_invariant(Matrix<Rat>(3, 2), Matrix<Rat>(4, 4)), std::invalid_argument);
}

TEST(Phi, OrthogonalChangeOfWitness) {
  // phi -> phi M with M J M^T = J keeps g; det M = 1 keeps Phi, det M = -1 flips it.
  for (auto [n, r] : kPhiPairs) {
    std::vector<Rat> eig{Rat(2), Rat(-3, 2)};
    eig.resize(static_cast<std::size_t>(r));
    ZPoint p = sample_Z_point(n, r, eig, 11);
    std::size_t R = static_cast<std::size_t>(r);
    std::mt19937_64 rng(n + r);
    Matrix<Rat> t(R, R);
    do {
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < R; ++j) t(i, j) = oracle::random_rat(rng);
    } while (det(t).is_zero());
    Matrix<Rat> so = block_diag<Rat>({t, inverse(t).transpose()});
    Matrix<Rat> swap = Matrix<Rat>::identity(2 * R);
    swap(0, 0) = swap(R, R) = Rat(0);
    swap(0, R) = swap(R, 0) = Rat(1);
    Matrix<Rat> J = orthogonal_form(r);
    ASSERT_EQ(so * J * so.transpose(), J);
    ASSERT_EQ(swap * J * swap.transpose(), J);
    Rat phi = phi_invariant(*p.phi, p.f);
    ASSERT_FALSE(phi.is_zero());
    Matrix<Rat> a = *p.phi * so, b = *p.phi * swap;
    EXPECT_EQ(a * J * a.transpose(), p.g);
    EXPECT_EQ(phi_invariant(a, p.f), phi);
    EXPECT_EQ(phi_invariant(b, p.f), -phi);
  }
}

TEST(Pfaffians, RankDuality) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      Matrix<Rat> m = skew_of_rank(n, k, rng);
      ASSERT_EQ(rank(m), 2 * k);
      for (std::size_t j = 0; 2 * j + 2 <= n; ++j) {
        bool vanish = true;
        for (const auto& x : sub_pfaffians(m, 2 * j + 2)) vanish = vanish && x.is_zero();
        EXPECT_EQ(vanish, rank(m) <= 2 * j) << n << " " << k << " " << j;
      }
    }
  // sampled f on Z: Pfaffians of size 2(n-r)+2 vanish
  for (auto [n, r] : kAllPairs) {
    ZPoint p = sample_Z_point(n, r, eigen_for(n, r, 2), 2);
    std::size_t s = 2 * static_cast<std::size_t>(n - r) + 2;
    if (s <= static_cast<std::size_t>(n))
      for (const auto& x : sub_pfaffians(p.f, s)) EXPECT_TRUE(x.is_zero());
  }
}

namespace {

// The probe point is a dual-number point of Z: the rank equations hold exactly.
void expect_on_Z(const ProbeResult& pr) {
  std::size_t n = static_cast<std::size_t>(pr.n), r = static_cast<std::size_t>(pr.r);
  if (2 * (n - r) + 2 <= n)
    for (const auto& x : sub_pfaffians(pr.f, 2 * (n - r) + 2)) EXPECT_TRUE(x.is_zero());
  if (2 * r + 1 <= n)
    for (const auto& x : minors(pr.g, 2 * r + 1)) EXPECT_TRUE(x.is_zero());
}

}  // namespace

TEST(Probe, AllFamiliesVanishToFirstOrder) {
  for (auto fam : {ProbeFamily::BV0, ProbeFamily::BVA, ProbeFamily::DV0, ProbeFamily::DDetG}) {
    for (const auto& lambda : std::vector<std::vector<Rat>>{{}, {Rat(2)}, {Rat(2), Rat(3)}, {Rat(-1, 2), Rat(3)}}) {
      auto pr = epsilon_probe(fam, lambda);
      SCOPED_TRACE(family_name(fam));
      EXPECT_TRUE(pr.value.value().is_zero());
      EXPECT_FALSE(pr.value.slope().is_zero());
      EXPECT_TRUE(pr.full.value().is_zero());
      EXPECT_FALSE(pr.full.slope().is_zero());
      expect_on_Z(pr);
    }
  }
}

TEST(Probe, QuarticFactor) {
  auto pr = epsilon_probe("B-case-VA", {Rat(2), Rat(3)});
  // t^4 + (2 + 2eps) t^2 + 1 - 2eps
  EXPECT_EQ(pr.quartic, (std::vector<DualRat>{DualRat(Rat(1), Rat(-2)), DualRat(0), DualRat(Rat(2), Rat(2)),
                                               DualRat(0), DualRat(1)}));
  EXPECT_EQ(pr.value, DualRat(Rat(0), Rat(16)));
}

TEST(Probe, QuarticDiscriminantSymbolic) {
  // Delta of u^4 + b u^2 + c is 4^2 c (b^2 - 4c).
  RingPtr ring = make_ring({{"b", 1}, {"c", 1}});
  MPoly b = MPoly::variable(ring, "b"), c = MPoly::variable(ring, "c");
  EXPECT_EQ(delta_of(std::vector<MPoly>{b, c}), (b * b - c.scaled(Rat(4))) * c.scaled(Rat(16)));
}

TEST(Probe, DTypeSlopesFollowPhi) {
  for (const auto& lambda : std::vector<std::vector<Rat>>{{Rat(2)}, {Rat(2), Rat(5)}, {Rat(2), Rat(-1, 3), Rat(7)}}) {
    Rat prod(1);
    for (const auto& l : lambda) prod *= l;
    for (auto fam : {ProbeFamily::DV0, ProbeFamily::DDetG}) {
      auto pr = epsilon_probe(fam, lambda);
      ASSERT_TRUE(pr.phi);
      EXPECT_TRUE(pr.phi->value().is_zero());
      EXPECT_TRUE(pr.phi->slope() == prod || pr.phi->slope() == -prod);
      // reduced Delta = (-4)^r Phi disc(chibar~), a nonzero multiple of Phi; Delta itself is flat
      EXPECT_TRUE(pr.delta.is_zero());
      Rat ratio = pr.full.slope() / pr.phi->slope();
      EXPECT_FALSE(ratio.is_zero());
    }
  }
  // detg: the Plucker coordinate satisfies y^2 = (-1)^r det g to first order
  auto pr = epsilon_probe(ProbeFamily::DDetG, {Rat(2)});
  EXPECT_TRUE(det(pr.g).is_zero());
}

TEST(Probe, ParameterChecks) {
  EXPECT_THROW(epsilon_probe("B-case-VA", {Rat(1)}), std::invalid_argument);
  EXPECT_THROW(epsilon_probe("B-case-VA", {Rat(-1)}), std::invalid_argument);
  EXPECT_THROW(epsilon_probe("B-case-V0", {Rat(0)}), std::invalid_argument);
  EXPECT_THROW(epsilon_probe("D-case-V0", {Rat(2), Rat(-2)}), std::invalid_argument);
  EXPECT_THROW(epsilon_probe("C-case", {}), std::invalid_argument);
  EXPECT_THROW(epsilon_probe("B-case-V0", {Rat(2)}, 0), std::invalid_argument);
}

namespace {

// Evaluate a polynomial in g and y at phi J phi^T and the maximal minors of phi (Leibniz).
Rat at_random_phi(const ZPrimeIdeal& z, const MPoly& f, std::mt19937_64& rng) {
  Matrix<Rat> phi(z.n, 2 * z.r);
  for (int i = 0; i < z.n; ++i)
    for (int a = 0; a < 2 * z.r; ++a) phi(i, a) = oracle::random_rat(rng);
  Matrix<Rat> g = phi * orthogonal_form(z.r) * phi.transpose();
  std::vector<Rat> vals;
  for (int i = 0; i < z.n; ++i)
    for (int j = i; j < z.n; ++j) vals.push_back(g(i, j));
  std::vector<std::size_t> cols(2 * z.r);
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  for (const auto& s : subsets(z.n, 2 * z.r)) vals.push_back(oracle::det_leibniz(phi.submatrix(s, cols)));
  return f.evaluate(vals);
}

}  // namespace

TEST(ZPrime, HalfCaseIsDoubleCover) {
  auto z = z_prime_ideal(2, 1);
  EXPECT_EQ(z.method, "elimination");
  ASSERT_EQ(z.ideal.generators.size(), 1u);
  RingPtr ring = z.ideal.ring;
  MPoly y = MPoly::variable(ring, "y1_2");
  Matrix<MPoly> g = symmetric_variables(ring, 2);
  // y^2 = (-1)^r det g with r = 1
  MPoly expect = y * y + det(g);
  EXPECT_TRUE(ideals_equal(z.ideal, IdealPresentation(ring, {expect})));
  EXPECT_EQ(ring->weight(ring->index("y1_2")), 1);
  ZPrimeOptions lin;
  lin.method = ZPrimeOptions::Method::Linear;
  EXPECT_TRUE(ideals_equal(z_prime_ideal(2, 1, lin).ideal, z.ideal));
  // n = 4, r = 2: y^2 = det g, Plucker weight 2
  auto z4 = z_prime_ideal(4, 2, lin);
  RingPtr r4 = z4.ideal.ring;
  MPoly y4 = MPoly::variable(r4, "y1_2_3_4");
  EXPECT_EQ(r4->weight(r4->index("y1_2_3_4")), 2);
  EXPECT_TRUE(ideals_equal(z4.ideal, IdealPresentation(r4, {y4 * y4 - det(symmetric_variables(r4, 4))})));
}

TEST(ZPrime, GeneratorsVanishOnParametrization) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}}) {
    auto z = z_prime_ideal(n, r);
    EXPECT_EQ(z.method, "linear");
    EXPECT_GE(z.certified_degree, 4);
    std::mt19937_64 rng(n);
    for (const auto& f : z.ideal.generators) {
      EXPECT_LE(f.degree(), 4);
      for (int t = 0; t < 3; ++t) ASSERT_TRUE(at_random_phi(z, f, rng).is_zero()) << f.to_string();
      ASSERT_TRUE(vanishes_on_parametrization(n, r, f));
    }
  }
}

TEST(ZPrime, ContainsZIdeal) {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    auto z = z_prime_ideal(n, r);
    GenericPair p = generic_pair(n, r);
    std::vector<MPoly> minors_g;
    for (const auto& m : z_ideal(p).generators) minors_g.push_back(m.rebase(z.ideal.ring));
    EXPECT_TRUE(ideal_contains(z.ideal, IdealPresentation(z.ideal.ring, minors_g))) << n << "," << r;
  }
}

TEST(ZPrime, HilbertFunctionAgainstParametrization) {
  // dim of degree-d piece equals the rank of the image span, computed densely here.
  auto z = z_prime_ideal(3, 1);
  for (int d = 0; d <= 3; ++d)
    EXPECT_EQ(oracle::hilbert_function_linear(z.ideal.ring, z.ideal.generators, d), z.hilbert[static_cast<std::size_t>(d)]);
  // torus invariants of degree 2d in 3 + 3 variables of weight +-1: binomial(d + 2, 2)^2
  const std::vector<unsigned long long> expect{1, 9, 36, 100, 225};
  ASSERT_GE(z.hilbert.size(), 5u);
  for (std::size_t d = 0; d < expect.size(); ++d) EXPECT_EQ(z.hilbert[d], expect[d]);
}

TEST(ZPrime, Preconditions) {
  EXPECT_THROW(z_prime_ideal(3, 2), std::invalid_argument);
  EXPECT_THROW(z_prime_ideal(3, 0), std::invalid_argument);
}
