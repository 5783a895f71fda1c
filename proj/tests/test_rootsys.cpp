#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace lierep;
using lierep::testing::weight;

namespace
{

RootVector rv(std::initializer_list<int> c) { return RootVector(c); }

} // namespace

TEST(RootSystem, PositiveRootCounts)
{
  struct Case
  {
    char type;
    int rank;
    std::size_t count;
  };
  for (auto [t, r, n] : {Case{'A', 1, 1}, Case{'A', 2, 3}, Case{'A', 3, 6}, Case{'A', 4, 10}, Case{'B', 2, 4},
                         Case{'B', 3, 9}, Case{'B', 4, 16}, Case{'C', 3, 9}, Case{'C', 4, 16}, Case{'D', 4, 12},
                         Case{'F', 4, 24}, Case{'G', 2, 6}})
  {
    auto rs = RootSystem::build(t, r);
    EXPECT_EQ(rs.num_positive(), n) << rs.label();
  }
}

TEST(RootSystem, A2PositiveRootsInBaseOrder)
{
  auto rs = RootSystem::build('A', 2);
  ASSERT_EQ(rs.num_positive(), 3u);
  EXPECT_EQ(rs.root(0), rv({1, 0}));
  EXPECT_EQ(rs.root(1), rv({0, 1}));
  EXPECT_EQ(rs.root(2), rv({1, 1}));
  EXPECT_EQ(rs.root(rs.negative(2)), rv({-1, -1}));
}

TEST(RootSystem, A1HasOnePositiveRoot)
{
  auto rs = RootSystem::build('A', 1);
  ASSERT_EQ(rs.num_positive(), 1u);
  EXPECT_EQ(rs.root(0), rv({1}));
}

TEST(RootSystem, CartanInvariants)
{
  for (auto label : {"A3", "B3", "C4", "D4", "F4", "G2"})
  {
    auto rs = RootSystem::from_label(label);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
      {
        int a = rs.cartan()[i][j];
        if (i == j)
          EXPECT_EQ(a, 2);
        else
          EXPECT_TRUE(a == 0 || a == -1 || a == -2 || a == -3);
      }
  }
}

TEST(RootSystem, RootStringClosure)
{
  // Every root sum that is a root is present and every root is ± a positive root.
  for (auto label : {"B3", "G2", "F4"})
  {
    auto rs = RootSystem::from_label(label);
    std::set<RootVector> all;
    for (int k = 0; k < static_cast<int>(rs.num_roots()); ++k)
      all.insert(rs.root(k));
    for (const auto& r : all)
      EXPECT_TRUE(all.contains(-r));
    for (int k = 0; k < static_cast<int>(rs.num_roots()); ++k)
    {
      const auto& r = rs.root(k);
      bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
      bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
      EXPECT_TRUE(nonneg || nonpos);
    }
  }
}

TEST(RootSystem, InvalidTypesRejected)
{
  EXPECT_THROW(RootSystem::build('E', 6), PreconditionError);
  EXPECT_THROW(RootSystem::build('B', 1), PreconditionError);
  EXPECT_THROW(RootSystem::build('G', 3), PreconditionError);
  EXPECT_THROW(RootSystem::from_label("Q2"), std::exception);
  EXPECT_THROW(RootSystem::from_label("A"), ParseError);
}

TEST(RootSystem, PairingExamples)
{
  auto rs = RootSystem::build('A', 2);
  EXPECT_EQ(rs.pairing(rs.fundamental(0), 0), 1);
  EXPECT_EQ(rs.pairing(rs.to_weight(rv({1, 0})), 1), -1);
  EXPECT_EQ(rs.pairing(rs.rho(), 2), 2);
  EXPECT_THROW(rs.pairing(rs.rho(), rv({2, 1})), PreconditionError);
}

TEST(RootSystem, PairingOnSimpleRootIsCoordinate)
{
  auto rs = RootSystem::build('B', 3);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial)
  {
    Weight w(3);
    for (auto& c : w.coords)
      c = lierep::testing::random_rational(rng);
    for (int i = 0; i < 3; ++i)
      EXPECT_EQ(rs.pairing(w, rs.simple_root_index(i)), w[i]);
  }
}

TEST(RootSystem, CorootPairingMatchesInnerProducts)
{
  // ⟨β, α^∨⟩ = 2(β, α)/(α, α) with the G2 form (α₁ short, α₂ long).
  auto rs = RootSystem::build('G', 2);
  auto form = [](const RootVector& a, const RootVector& b) {
    const long g[2][2] = {{2, -3}, {-3, 6}};
    long s = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        s += a[i] * g[i][j] * b[j];
    return s;
  };
  for (int a = 0; a < static_cast<int>(rs.num_roots()); ++a)
    for (int b = 0; b < static_cast<int>(rs.num_roots()); ++b)
      EXPECT_EQ(rs.pairing(b, a) * form(rs.root(a), rs.root(a)), 2 * form(rs.root(b), rs.root(a)));
}

TEST(RootSystem, DotReflectFormulaA2)
{
  auto rs = RootSystem::build('A', 2);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial)
  {
    Rational a = lierep::testing::random_rational(rng), b = lierep::testing::random_rational(rng);
    Weight l = weight({a, b});
    EXPECT_EQ(rs.dot_reflect(0, l), weight({-(a + 2), a + b + 1}));
    EXPECT_EQ(rs.dot_reflect(0, rs.dot_reflect(0, l)), l);
    EXPECT_EQ(rs.dot_reflect(1, rs.dot_reflect(1, l)), l);
  }
  Weight minus_rho = -1 * rs.rho();
  EXPECT_EQ(rs.dot_reflect(0, minus_rho), minus_rho);
  EXPECT_EQ(rs.dot_reflect(0, rs.zero_weight()), weight({-2, 1}));
}

TEST(RootSystem, DotOrbits)
{
  auto rs = RootSystem::build('A', 2);
  EXPECT_EQ(rs.dot_orbit(-1 * rs.rho()).size(), 1u);
  EXPECT_EQ(rs.dot_orbit(rs.zero_weight()).size(), 6u);
  EXPECT_EQ(rs.dot_orbit(weight({1, -1})).size(), 3u);
  auto g2 = RootSystem::build('G', 2);
  EXPECT_EQ(g2.dot_orbit(g2.zero_weight()).size(), 12u);
}

TEST(RootSystem, DotOrbitClosedAndContainsStart)
{
  auto rs = RootSystem::build('B', 2);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial)
  {
    Weight l = weight({lierep::testing::random_rational(rng), lierep::testing::random_rational(rng)});
    auto orbit = rs.dot_orbit(l);
    std::set<Weight> s(orbit.begin(), orbit.end());
    EXPECT_TRUE(s.contains(l));
    EXPECT_EQ(8u % s.size(), 0u);
    for (const auto& w : s)
      for (int i = 0; i < 2; ++i)
        EXPECT_TRUE(s.contains(rs.dot_reflect(i, w)));
  }
}

TEST(RootSystem, OrbitsPartitionSamples)
{
  auto rs = RootSystem::build('A', 2);
  std::vector<Weight> sample;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      sample.push_back(weight({ratio(a, 2), ratio(b, 2)}));
  for (const auto& x : sample)
    for (const auto& y : sample)
    {
      auto ox = rs.dot_orbit(x), oy = rs.dot_orbit(y);
      std::set<Weight> sx(ox.begin(), ox.end()), sy(oy.begin(), oy.end());
      EXPECT_EQ(sx.contains(y), sx == sy);
    }
}

TEST(RootSystem, ClassifyWeight)
{
  auto rs = RootSystem::build('A', 2);
  auto c = rs.classify_weight(weight({1, 1}));
  EXPECT_TRUE(c.dominant_integral);
  EXPECT_FALSE(c.singular);
  EXPECT_TRUE(c.integral);
  c = rs.classify_weight(weight({ratio(1, 2), -1}));
  EXPECT_FALSE(c.dominant_integral);
  EXPECT_TRUE(c.singular);
  EXPECT_FALSE(c.integral);
  c = rs.classify_weight(-1 * rs.rho());
  EXPECT_FALSE(c.dominant_integral);
  EXPECT_TRUE(c.singular);
  EXPECT_TRUE(c.integral);
}

TEST(RootSystem, RootSubsystems)
{
  auto a2 = RootSystem::build('A', 2);
  EXPECT_TRUE(a2.root_subsystem(SimpleSubset{}).empty());
  auto sub = a2.root_subsystem(SimpleSubset{0});
  std::set<RootVector> got;
  for (int k : sub)
    got.insert(a2.root(k));
  EXPECT_EQ(got, (std::set<RootVector>{rv({1, 0}), rv({-1, 0})}));
  auto a3 = RootSystem::build('A', 3);
  auto six = a3.root_subsystem(SimpleSubset{0, 1});
  EXPECT_EQ(six.size(), 6u);
  for (int k : six)
    EXPECT_EQ(a3.root(k)[2], 0);
}

TEST(RootSystem, Interior)
{
  auto a2 = RootSystem::build('A', 2);
  EXPECT_TRUE(a2.interior(SimpleSubset{0}).empty());
  auto a3 = RootSystem::build('A', 3);
  EXPECT_EQ(a3.interior(SimpleSubset{0, 1}), SimpleSubset{0});
  EXPECT_TRUE(a3.interior(SimpleSubset{}).empty());
}

TEST(RootSystem, InteriorIsSubsetAndFixesFullSets)
{
  for (auto label : {"A3", "B3", "D4", "A4"})
  {
    auto rs = RootSystem::from_label(label);
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask)
    {
      auto I = SimpleSubset::from_mask(mask);
      auto inner = rs.interior(I);
      EXPECT_TRUE(inner.is_subset_of(I));
      // Independent definition: β ∈ I with α(h_β) = 0 for all α ∉ I.
      for (int b : I.members())
      {
        bool orth = true;
        for (int a = 0; a < rs.rank(); ++a)
          if (!I.contains(a) && rs.cartan()[a][b] != 0)
            orth = false;
        EXPECT_EQ(inner.contains(b), orth);
      }
    }
    EXPECT_EQ(rs.interior(SimpleSubset::all(rs.rank())), SimpleSubset::all(rs.rank()));
  }
}

TEST(RootSystem, TotallyProper)
{
  auto a2 = RootSystem::build('A', 2);
  EXPECT_TRUE(a2.is_totally_proper(SimpleSubset{0}));
  EXPECT_FALSE(a2.is_totally_proper(SimpleSubset{0, 1}));
  auto a3 = RootSystem::build('A', 3);
  EXPECT_TRUE(a3.is_totally_proper(SimpleSubset{0, 2}));
}

TEST(RootSystem, BadPrimes)
{
  EXPECT_EQ(RootSystem::build('A', 1).bad_primes(), (std::set<long>{2}));
  EXPECT_EQ(RootSystem::build('A', 2).bad_primes(), (std::set<long>{2, 3}));
  EXPECT_EQ(RootSystem::build('B', 2).bad_primes(), (std::set<long>{2}));
  EXPECT_EQ(RootSystem::build('G', 2).bad_primes(), (std::set<long>{2, 3}));
}

TEST(RootSystem, B2SubsystemDeterminants)
{
  auto rs = RootSystem::build('B', 2);
  std::multiset<long> dets;
  for (const auto& s : rs.closed_subsystems())
    if (!s.simple_roots.empty())
      dets.insert(std::labs(s.determinant));
  EXPECT_TRUE(dets.contains(2));
  EXPECT_TRUE(dets.contains(4));
  for (long d : dets)
    EXPECT_TRUE(d == 2 || d == 4) << d;
}

TEST(RootSystem, BadPrimesIndependentOfEnumerationOrder)
{
  for (auto label : {"A2", "B2", "G2", "A3"})
  {
    auto rs = RootSystem::from_label(label);
    auto reference = rs.bad_primes();
    std::vector<int> order(rs.num_roots());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = static_cast<int>(i);
    std::mt19937 rng(42);
    for (int t = 0; t < 5; ++t)
    {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(rs.bad_primes(order), reference) << label;
    }
  }
}

TEST(RootSystem, DualBasis)
{
  auto a1 = RootSystem::build('A', 1);
  EXPECT_EQ(a1.dual_h_basis()(0, 0), ratio(1, 2));
  auto a2 = RootSystem::build('A', 2);
  Matrix m = a2.dual_h_basis();
  EXPECT_EQ(m(0, 0), ratio(2, 3));
  EXPECT_EQ(m(0, 1), ratio(1, 3));
  // α_j(h^β) = Σ_γ M[β][γ] ⟨α_j, α_γ^∨⟩ = δ_{βj}, checked for a non-symmetric Cartan matrix too.
  for (auto label : {"A2", "B3", "G2"})
  {
    auto rs = RootSystem::from_label(label);
    Matrix d = rs.dual_h_basis();
    for (int b = 0; b < rs.rank(); ++b)
      for (int j = 0; j < rs.rank(); ++j)
      {
        Rational s = 0;
        for (int g = 0; g < rs.rank(); ++g)
          s += d(b, g) * rs.cartan()[j][g];
        EXPECT_EQ(s, b == j ? 1 : 0);
      }
  }
}

TEST(RootSystem, WeightParsing)
{
  auto rs = RootSystem::build('A', 2);
  EXPECT_EQ(rs.parse_weight("1/2,-1"), weight({ratio(1, 2), -1}));
  EXPECT_EQ(rs.parse_weight(" 3 , -4/6 "), weight({3, ratio(-2, 3)}));
  EXPECT_THROW(rs.parse_weight("1,2,3"), ParseError);
  EXPECT_THROW(rs.parse_weight("1/0,2"), ParseError);
  EXPECT_THROW(rs.parse_weight("x,2"), ParseError);
}

TEST(Rational, ValuationAndHelpers)
{
  EXPECT_EQ(valuation(ratio(50, 3), 5), 2);
  EXPECT_EQ(valuation(ratio(3, 25), 5), -2);
  EXPECT_EQ(valuation(Rational(0), 5), kInfiniteValuation);
  EXPECT_TRUE(is_natural0(Rational(0)));
  EXPECT_FALSE(is_natural(Rational(0)));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_EQ(ratio(-2, 2), Rational(-1));
}
