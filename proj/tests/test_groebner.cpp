#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "perisplit/groebner/hilbert.hpp"
#include "perisplit/groebner/koszul.hpp"

using namespace perisplit;

namespace {

IdealPresentation ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<MPoly> g;
  for (const auto& s : gens) g.push_back(MPoly::parse(ring, s));
  return IdealPresentation(ring, g);
}

IdealPresentation pfaffian_ideal(std::size_t n, std::size_t size) {
  RingPtr ring;
  auto f = oracle::generic_skew(n, ring);
  return IdealPresentation(ring, sub_pfaffians(f, size));
}

long long hs_times_den(const IdealPresentation& ideal, int j) {
  auto hs = hilbert_series(ideal);
  return hs.numerator.size() > static_cast<std::size_t>(j) ? hs.numerator[static_cast<std::size_t>(j)].get_si() : 0;
}

}  // namespace

TEST(Groebner, PrincipalLinear) {
  auto ring = make_ring({{"x", 1}, {"y", 1}});
  auto gb = groebner_basis(ideal_of(ring, {"x"}), MonomialOrder::lex());
  EXPECT_EQ(gb.serialized(), std::vector<std::string>{"x"});
}

TEST(Groebner, ZeroDimensionalExamples) {
  auto ring = make_ring({{"x", 1}, {"y", 1}});
  auto gb = groebner_basis(ideal_of(ring, {"x^2 - y", "y^2 - x"}), MonomialOrder::grlex());
  EXPECT_EQ(quotient_dimension(gb), 4ULL);
  EXPECT_TRUE(gb.contains(MPoly::parse(ring, "x^4 - x")));
  EXPECT_EQ(quotient_dimension(ideal_of(ring, {"x^2", "y^2"})), 4ULL);
  EXPECT_FALSE(quotient_dimension(ideal_of(ring, {"x^2"})).has_value());

  auto eta = make_ring({{"e1", 1}, {"e2", 1}});
  EXPECT_EQ(quotient_dimension(ideal_of(eta, {"e1^2 + e2^2", "e1^2*e2^2"})), 8ULL);
}

TEST(Groebner, UniversalFiberRanks) {
  auto ring = make_ring({{"e1", 1}, {"e2", 1}, {"e3", 1}});
  EXPECT_EQ(quotient_dimension(ideal_of(ring, {"e1^2 + e2^2 + e3^2", "e1^2*e2^2 + e1^2*e3^2 + e2^2*e3^2",
                                               "e1^2*e2^2*e3^2"})),
            48ULL);
  EXPECT_EQ(quotient_dimension(
                ideal_of(ring, {"e1^2 + e2^2 + e3^2", "e1^2*e2^2 + e1^2*e3^2 + e2^2*e3^2", "e1*e2*e3"})),
            24ULL);
}

TEST(Groebner, ReducedBasisIsDeterministicAndOrderSpecific) {
  auto ring = make_ring({{"x", 1}, {"y", 1}, {"z", 1}});
  auto I = ideal_of(ring, {"x*y - z^2", "x^2 - y*z", "y^2 - x*z"});
  auto a = groebner_basis(I, MonomialOrder::grevlex()).serialized();
  auto b = groebner_basis(I, MonomialOrder::grevlex()).serialized();
  EXPECT_EQ(a, b);
  // generator order must not matter for the reduced basis
  auto J = ideal_of(ring, {"y^2 - x*z", "x*y - z^2", "x^2 - y*z"});
  EXPECT_EQ(groebner_basis(J, MonomialOrder::lex()).serialized(), groebner_basis(I, MonomialOrder::lex()).serialized());
  for (const auto& g : groebner_basis(I, MonomialOrder::lex()).polynomials()) EXPECT_TRUE(g.leading_term().coeff.is_one());
}

TEST(Groebner, BudgetIsEnforced) {
  auto I = pfaffian_ideal(6, 4);
  GroebnerOptions opts;
  opts.budget = 3;
  EXPECT_THROW(groebner_basis(I, MonomialOrder::lex(), opts), BudgetExceeded);
}

TEST(Groebner, MembershipMatchesLinearAlgebra) {
  // dim (S/I)_d from standard monomials vs. a dense span computation
  auto I = pfaffian_ideal(5, 4);
  auto gb = groebner_basis(I, MonomialOrder::grevlex());
  auto sm = standard_monomials_by_degree(gb, 4);
  for (int d = 0; d <= 4; ++d)
    EXPECT_EQ(sm[static_cast<std::size_t>(d)].size(), oracle::hilbert_function_linear(I.ring, I.generators, d)) << d;
}

TEST(Eliminate, Examples) {
  auto r1 = make_ring({{"x", 1}, {"y", 1}});
  EXPECT_TRUE(eliminate(ideal_of(r1, {"y - x^2"}), {"x"}).generators.empty());

  auto r2 = make_ring({{"t", 1}, {"x", 1}, {"y", 1}});
  auto cusp = eliminate(ideal_of(r2, {"x - t^2", "y - t^3"}), {"t"});
  ASSERT_EQ(cusp.generators.size(), 1u);
  MPoly expect = MPoly::parse(cusp.ring, "y^2 - x^3");
  EXPECT_TRUE(cusp.generators[0] == expect || cusp.generators[0] == -expect);
  // substitution oracle: generator vanishes on the parametrization
  auto pr = make_ring({{"t", 1}});
  MPoly t = MPoly::variable(pr, 0);
  EXPECT_TRUE(cusp.generators[0].substitute({t.pow(2), t.pow(3)}).is_zero());
}

TEST(Eliminate, IdealEqualityHelpers) {
  auto ring = make_ring({{"x", 1}, {"y", 1}});
  EXPECT_TRUE(ideals_equal(ideal_of(ring, {"x + y", "x - y"}), ideal_of(ring, {"x", "y"})));
  EXPECT_FALSE(ideals_equal(ideal_of(ring, {"x*y"}), ideal_of(ring, {"x"})));
}

TEST(Hilbert, Examples) {
  auto r = make_ring({{"x", 1}});
  auto hs = hilbert_series(IdealPresentation(r, {}));
  EXPECT_EQ(poly_to_string(hs.numerator), "1");
  EXPECT_EQ(hs.weights, std::vector<int>{1});
  auto c = hs.expand(5);
  for (auto& x : c) EXPECT_EQ(x, 1);

  auto eta = make_ring({{"e1", 1}, {"e2", 1}});
  auto sg = hilbert_series(ideal_of(eta, {"e1^2 + e2^2", "e1^2*e2^2"}));
  auto p = sg.polynomial();
  ASSERT_TRUE(p.has_value());
  // (1+t)(1+t+t^2+t^3)
  EXPECT_EQ(poly_to_string(*p), "1 + 2*t + 2*t^2 + 2*t^3 + t^4");
  EXPECT_FALSE(hilbert_series(IdealPresentation(r, {})).polynomial().has_value());
}

TEST(Hilbert, CompleteIntersectionFormula) {
  std::mt19937_64 rng(17);
  auto ring = make_ring({{"x", 1}, {"y", 2}, {"z", 3}});
  // generic-ish forms of degrees 4 and 6 cut out a complete intersection
  auto I = ideal_of(ring, {"x^4 + 3*x^2*y + y^2 - x*z", "z^2 + x^3*z - 2*y^3 + x^6"});
  auto hs = hilbert_series(I);
  IntPoly expect = poly_mul(one_minus(4), one_minus(6));
  EXPECT_EQ(hs.numerator, expect);
  auto e = hs.expand(10);
  for (int d = 0; d <= 10; ++d)
    EXPECT_EQ(e[static_cast<std::size_t>(d)], oracle::hilbert_function_linear(ring, I.generators, d)) << d;
}

TEST(Hilbert, DimensionIsSumOfSeries) {
  auto ring = make_ring({{"e1", 1}, {"e2", 1}, {"e3", 1}});
  auto I = ideal_of(ring, {"e1^2 + e2^2 + e3^2", "e1^2*e2^2 + e1^2*e3^2 + e2^2*e3^2", "e1*e2*e3"});
  auto p = hilbert_series(I).polynomial();
  ASSERT_TRUE(p.has_value());
  mpz_class total = 0;
  for (auto& c : *p) total += c;
  EXPECT_EQ(total, 24);
  EXPECT_EQ(*p, poly_mul(poly_mul(IntPoly{1, 1, 1, 1}, IntPoly{1, 1}), IntPoly{1, 1, 1}));
}

TEST(Koszul, Hypersurfaces) {
  auto r = make_ring({{"x", 1}});
  auto t = koszul_tor(ideal_of(r, {"x"}), 2, 3);
  EXPECT_EQ(t.entries().size(), 2u);
  EXPECT_EQ(t.at(0, 0), 1u);
  EXPECT_EQ(t.at(1, 1), 1u);

  auto pf4 = koszul_tor(pfaffian_ideal(4, 4), 2, 4);
  EXPECT_EQ(pf4.entries().size(), 2u);
  EXPECT_EQ(pf4.at(0, 0), 1u);
  EXPECT_EQ(pf4.at(1, 2), 1u);
}

TEST(Koszul, CompleteIntersectionIsKoszulOnGenerators) {
  auto r = make_ring({{"x", 1}, {"y", 1}});
  auto t = koszul_tor(ideal_of(r, {"x^2", "y^3"}), 2, 6);
  BettiTable expect(2, 6);
  expect.add(0, 0, 1);
  expect.add(1, 2, 1);
  expect.add(1, 3, 1);
  expect.add(2, 5, 1);
  EXPECT_EQ(t, expect) << t.to_text();
}

TEST(Koszul, BuchsbaumEisenbudShape) {
  auto t = koszul_tor(pfaffian_ideal(5, 4), 3, 6);
  BettiTable expect(3, 6);
  expect.add(0, 0, 1);
  expect.add(1, 2, 5);
  expect.add(2, 3, 5);
  expect.add(3, 5, 1);
  EXPECT_EQ(t, expect) << t.to_text();
}

TEST(Koszul, EulerIdentity) {
  std::vector<IdealPresentation> cases{pfaffian_ideal(5, 4), pfaffian_ideal(4, 4)};
  auto ring = make_ring({{"x", 1}, {"y", 1}, {"z", 1}});
  cases.push_back(ideal_of(ring, {"x*y - z^2", "x^2 - y*z", "y^2 - x*z"}));
  for (const auto& I : cases) {
    int n = static_cast<int>(I.ring->size());
    int max_j = 5;
    auto t = koszul_tor(I, n, max_j);
    for (int j = 0; j <= max_j; ++j) EXPECT_EQ(t.euler(j), hs_times_den(I, j)) << "degree " << j;
  }
}

TEST(Koszul, PermutationInvariance) {
  auto I = pfaffian_ideal(5, 4);
  auto vars = I.ring->vars();
  std::mt19937_64 rng(23);
  std::shuffle(vars.begin(), vars.end(), rng);
  auto J = I.in_ring(make_ring(vars));
  EXPECT_EQ(koszul_tor(I, 3, 5), koszul_tor(J, 3, 5));
}

TEST(Koszul, ParallelMatchesSerial) {
  auto I = pfaffian_ideal(5, 4);
  KoszulOptions par;
  par.jobs = 3;
  EXPECT_EQ(koszul_tor(I, 3, 6), koszul_tor(I, 3, 6, par));
}

TEST(Koszul, ActingSubset) {
  // S/I = Q[x] + y Q[x] is free over Q[x]
  auto r = make_ring({{"x", 2}, {"y", 1}});
  KoszulOptions opts;
  opts.acting = {"x"};
  auto t = koszul_tor(ideal_of(r, {"y^2 - x"}), 1, 6, opts);
  BettiTable expect(1, 6);
  expect.add(0, 0, 1);
  expect.add(0, 1, 1);
  EXPECT_EQ(t, expect) << t.to_text();
}

TEST(Koszul, RejectsUngraded) {
  auto r = make_ring({{"x", 1}});
  EXPECT_THROW(koszul_tor(ideal_of(r, {"x^2 - x"}), 1, 2), std::invalid_argument);
}

TEST(BettiTable, JsonRoundTrip) {
  BettiTable t(2, 3);
  t.add(0, 0, 1);
  t.add(1, 2, 5, {{{1, 1}, false, 1}});
  t.add(7, 0, 1);
  EXPECT_EQ(t.entries().size(), 2u);
  auto j = t.to_json();
  EXPECT_EQ(j["entries"][1]["labels"][0], "S(1,1)V");
  EXPECT_EQ(BettiTable::from_json(j), t);
  EXPECT_EQ(t.diff(BettiTable(2, 3)).size(), 2u);
}
