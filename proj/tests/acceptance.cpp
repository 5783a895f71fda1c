// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace lierep;
using lierep::testing::algebra;
using lierep::testing::weight;

namespace
{

/// Collects failures; keeps the first message for the report line.
class Outcome
{
public:
  void require(bool ok, const std::string& what)
  {
    ++checks_;
    if (!ok && first_.empty())
      first_ = what;
    if (!ok)
      ++failures_;
  }
  bool passed() const { return failures_ == 0; }
  long checks() const { return checks_; }
  const std::string& first() const { return first_; }

private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

using Criterion = std::function<void(Outcome&)>;

Weight sample_dominant_on(const RootSystem& rs, const SimpleSubset& I, std::mt19937& rng)
{
  std::uniform_int_distribution<int> nat(0, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  Weight w(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
  {
    if (I.contains(i))
      w.coords[i] = nat(rng);
    else if (coin(rng) == 0)
      w.coords[i] = lierep::testing::random_nonintegral(rng);
    else
      w.coords[i] = nat(rng) - 4;
  }
  return w;
}

void chevalley(Outcome& out)
{
  for (auto label : {"A1", "A2", "A3", "B2", "G2"})
  {
    auto U = algebra(label[0], label[1] - '0');
    const auto& sc = U->constants();
    const auto& rs = sc.roots();
    auto report = verify_chevalley(sc);
    for (const auto& check : report.checks)
      out.require(check.passed, std::string(label) + " relation " + check.relation);
    for (int a = 0; a < static_cast<int>(rs.num_roots()); ++a)
      for (int b = 0; b < static_cast<int>(rs.num_roots()); ++b)
        out.require(sc(a, b) == sc(rs.negative(b), rs.negative(a)), std::string(label) + " C symmetry");
  }
}

void pbw(Outcome& out)
{
  auto U = algebra('A', 2);
  std::mt19937 rng(2024);
  using lierep::testing::random_element;
  for (int trial = 0; trial < 100; ++trial)
  {
    Element a = random_element(*U, rng, 2, 3), b = random_element(*U, rng, 2, 3), c = random_element(*U, rng, 2, 3);
    out.require(U->multiply(U->multiply(a, b), c) == U->multiply(a, U->multiply(b, c)),
                "associativity trial " + std::to_string(trial));
  }
  for (const auto& m : U->monomials_up_to(3))
  {
    Element x;
    x.add(m, 1);
    out.require(U->word_product(U->word(m)) == x, "normal form of a PBW monomial changed");
    out.require(U->multiply(x, U->one()) == x, "x·1 ≠ x");
  }
  for (int trial = 0; trial < 50; ++trial)
  {
    Element x = random_element(*U, rng, 6, 3), y = random_element(*U, rng, 4, 2);
    auto cx = U->weight_components(x);
    auto cy = U->weight_components(y);
    // Component ν of xy is Σ_{μ+η=ν} x_μ y_η.
    std::map<RootVector, Element> expected;
    for (const auto& [mu, a] : cx)
      for (const auto& [eta, b] : cy)
      {
        Element prod = U->multiply(a, b);
        for (const auto& [w, part] : U->weight_components(prod))
          out.require(w == mu + eta, "product of weight components leaves its weight");
        expected[mu + eta] += prod;
      }
    auto actual = U->weight_components(U->multiply(x, y));
    for (const auto& [nu, part] : expected)
      if (!part.is_zero())
        out.require(actual.contains(nu) && actual.at(nu) == part, "weight component of a product");
  }
}

void verma_kostant(Outcome& out)
{
  std::mt19937 rng(31);
  for (auto [t, r] : {std::pair{'A', 2}, std::pair{'G', 2}})
  {
    auto U = algebra(t, r);
    const auto& rs = U->roots();
    Weight lambda(rs.rank());
    for (auto& c : lambda.coords)
      c = lierep::testing::random_nonintegral(rng);
    auto ch = verma(U, lambda, 6).character();
    for (const auto& nu : depth_vectors(rs.rank(), SimpleSubset::all(rs.rank()), 6))
      out.require(ch.dim_nu(nu) == lierep::testing::kostant_dp(rs, nu), rs.label() + " Kostant mismatch");
  }
}

void sl2_calibration(Outcome& out)
{
  auto U = algebra('A', 1);
  for (int m = 0; m <= 5; ++m)
  {
    auto ch = simple_dims(U, weight({m}), 8);
    out.require(ch.total() == m + 1, "simple_dims total for m=" + std::to_string(m));
    out.require(Integer(ch.total()) == weyl_dim(U->roots(), weight({m})), "Weyl dimension for m=" + std::to_string(m));
  }
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial)
  {
    Rational a = lierep::testing::random_nonintegral(rng);
    auto M = verma(U, weight({a}), 8);
    for (int k = 0; k <= 8; ++k)
    {
      RootVector nu{k};
      out.require(M.gram(nu).rank() == M.basis(nu).size(), "Gram rank deficient at a=" + to_string(a));
    }
  }
}

void case3_additivity(Outcome& out)
{
  auto U = algebra('A', 2);
  const auto& rs = U->roots();
  for (auto mu : {weight({0, 0}), weight({1, 0}), weight({1, 1})})
  {
    Weight lambda = rs.dot_reflect(1, mu);
    auto m = parabolic_verma(U, SimpleSubset{0}, mu, 6).character();
    auto top = simple_dims(U, mu, 6);
    auto bottom = simple_dims(U, lambda, 6);
    for (const auto& [w, d] : m.by_weight)
      out.require(d == top.dim(w) + bottom.dim(w), "additivity fails for µ=" + mu.str() + " at " + w.str());
    out.require(case3_character_check(U, mu, lambda, SimpleSubset{0}, 6), "case3_character_check for µ=" + mu.str());
  }
}

void reflection_identity(Outcome& out)
{
  auto sl2 = algebra('A', 1);
  auto a2 = algebra('A', 2);
  for (Rational a : {Rational(5), ratio(1, 2), ratio(-3, 4), Rational(-2)})
    for (int s = 0; s <= 10; ++s)
    {
      std::string tag = " a=" + to_string(a) + " s=" + std::to_string(s);
      out.require(reflection_formula_check(sl2, weight({a}), 0, s), "sl2" + tag);
      out.require(reflection_formula_check(a2, weight({a, ratio(2, 7)}), 0, s), "A2 α1" + tag);
      out.require(reflection_formula_check(a2, weight({ratio(-1, 3), a}), 1, s), "A2 α2" + tag);
    }
}

void jantzen_suite(Outcome& out)
{
  auto rs = RootSystem::build('A', 2);
  for (int a = 0; a <= 3; ++a)
    out.require(condition_star(rs, SimpleSubset{0}, weight({a, -1})).holds, "(*) for a=" + std::to_string(a));
  for (Rational a : {ratio(1, 2), ratio(-5, 4)})
    out.require(condition_star_star(rs, SimpleSubset{}, weight({a, -1})), "(**) for a=" + to_string(a));
  std::mt19937 rng(1234);
  int samples = 0, implied = 0;
  for (auto label : {"A2", "A3", "B2", "G2"})
  {
    auto sys = RootSystem::from_label(label);
    std::uniform_int_distribution<unsigned> mask(0, (1u << sys.rank()) - 1);
    for (int trial = 0; trial < 50; ++trial, ++samples)
    {
      auto I = SimpleSubset::from_mask(mask(rng));
      Weight w = sample_dominant_on(sys, I, rng);
      if (condition_star_star(sys, I, w))
      {
        ++implied;
        out.require(condition_star(sys, I, w).holds, std::string(label) + " (**) without (*) at " + w.str());
      }
    }
  }
  out.require(samples >= 200, "fewer than 200 samples");
  out.require(implied > 0, "no sample satisfied (**)");
}

void gvm_region(Outcome& out)
{
  auto U = algebra('A', 2);
  const auto& rs = U->roots();
  auto levi = rs.root_subsystem(SimpleSubset{0});
  int sampled = 0;
  for (auto lambda : {weight({1, 1}), weight({2, 0})})
  {
    long best = 1;
    for (;; ++best)
    {
      bool ok = true;
      for (int k : levi)
        if (is_natural(rs.pairing(lambda + rs.rho(), k) - best))
          ok = false;
      if (ok)
        break;
    }
    long A = compute_A(rs, levi, lambda);
    out.require(A == best, "A for λ=" + lambda.str());
    for (long c = -A; c > -A - 10; --c, ++sampled)
    {
      out.require(gvm_region_irreducible(rs, SimpleSubset{0}, lambda, {c}),
                  "region for λ=" + lambda.str() + " c=" + std::to_string(c));
      PhiMap phi(U, SimpleSubset{0}, lambda, {Rational(c)}, DeformationContext{5, 0, 5});
      const auto& target = phi.target();
      for (const auto& nu : depth_vectors(rs.rank(), SimpleSubset{0}, 5))
        out.require(target.gram(nu).rank() == target.basis(nu).size(),
                    "Gram rank deficient on the Levi Verma for c=" + std::to_string(c));
    }
  }
  out.require(sampled >= 20, "fewer than 20 sampled c");
}

void phi_c(Outcome& out)
{
  std::mt19937 rng(4242);
  auto shift = [&](long n) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> pick(0, 3);
    static const int dens[] = {1, 2, 3, 7};
    Rational c = ratio(num(rng), dens[pick(rng)]);
    if (n > 0 && pick(rng) == 0)
      c /= 5;
    return c;
  };
  for (auto [label, mask] : {std::pair{"A2", 1u}, std::pair{"A3", 3u}})
  {
    auto U = algebra(label[0], label[1] - '0');
    const auto& rs = U->roots();
    auto I = SimpleSubset::from_mask(mask);
    auto inner = rs.interior(I);
    auto outside = I.complement(rs.rank()).members();
    std::vector<Element> gens;
    for (int k : rs.positive_subsystem(I))
    {
      gens.push_back(U->e(k));
      gens.push_back(U->f(k));
    }
    for (int i = 0; i < rs.rank(); ++i)
      gens.push_back(U->h(i));
    for (int b : outside)
      gens.push_back(U->dual_h(b));
    const int depth = 4;
    for (int trial = 0; trial < 50; ++trial)
    {
      long n = trial % 2;
      DeformationContext ctx{5, n, depth};
      Weight lambda(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        lambda.coords[i] = inner.contains(i) ? Rational(trial % 3) : shift(n);
      std::vector<Rational> c;
      for (std::size_t k = 0; k < outside.size(); ++k)
        c.push_back(shift(n));
      PhiMap phi(U, I, lambda, c, ctx);
      std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
      Element x = U->scalar(lierep::testing::random_rational(rng, 3, 2)) + U->multiply(gens[g(rng)], gens[g(rng)]);
      ModuleVector m;
      for (const auto& nu : depth_vectors(rs.rank(), I, 2))
        for (const auto& b : phi.source().basis(nu))
          if (label_depth(b, *U) <= depth - 2)
            add_term(m, b, lierep::testing::random_rational(rng, 4, 3));
      out.require(phi_c_homomorphism_check(phi, x, m), std::string(label) + " homomorphism trial " + std::to_string(trial));
    }
    for (int depth = 1; depth <= 4; ++depth)
    {
      Weight lambda(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        lambda.coords[i] = inner.contains(i) ? Rational(1) : ratio(2, 3);
      PhiMap phi(U, I, lambda, std::vector<Rational>(outside.size(), Rational(-3)), DeformationContext{5, 0, depth});
      out.require(phi_c_surjective(phi, depth), std::string(label) + " surjectivity at depth " + std::to_string(depth));
    }
  }
  auto U = algebra('A', 2);
  Weight lambda = weight({2, ratio(1, 3)});
  out.require(hw_scalar_check(U, SimpleSubset{0}, lambda, {Rational(0)}, 0, DeformationContext{5, 0, 3}), "hw c=0");
  out.require(hw_scalar_check(U, SimpleSubset{0}, lambda, {Rational(-3)}, 0, DeformationContext{5, 0, 3}), "hw c=-3");
  out.require(hw_scalar_check(U, SimpleSubset{0}, lambda, {ratio(1, 5)}, 0, DeformationContext{5, 1, 3}), "hw c=1/5");
}

void good_primes(Outcome& out)
{
  out.require(RootSystem::build('A', 2).bad_primes() == std::set<long>{2, 3}, "bad primes of A2");
  out.require(RootSystem::build('A', 1).bad_primes() == std::set<long>{2}, "bad primes of A1");
  out.require(RootSystem::build('B', 2).bad_primes() == std::set<long>{2}, "bad primes of B2");
  std::mt19937 rng(10);
  for (auto label : {"A2", "A3", "B2", "G2"})
  {
    auto rs = RootSystem::from_label(label);
    auto base = rs.bad_primes();
    std::vector<int> order(rs.num_roots());
    for (int k = 0; k < static_cast<int>(order.size()); ++k)
      order[k] = k;
    for (int trial = 0; trial < 5; ++trial)
    {
      std::shuffle(order.begin(), order.end(), rng);
      out.require(rs.bad_primes(order) == base, std::string(label) + " bad primes depend on root order");
    }
  }
}

void iwasawa(Outcome& out)
{
  const auto& U = *algebra('A', 1);
  std::vector<Element> basis{U.f(0), U.h(0), U.e(0)};
  for (long n : {0L, 1L})
  {
    DeformationContext ctx{5, n, 6};
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c)
        {
          std::vector<int> s{a, b, c};
          int total = a + b + c;
          Element g = U.iwasawa_generator_monomial(s, basis, ctx);
          Element xs = U.multiply(U.multiply(U.power(U.f(0), a), U.power(U.h(0), b)), U.power(U.e(0), c));
          Rational scale = rational_power(Rational(5), static_cast<unsigned long>((n + 1) * total));
          out.require(g.min_degree() == total && g.homogeneous_part(total) == xs * scale,
                      "lowest term for s=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
  }
  // Powers of one letter are normal: exp(x)exp(−x) is 1 through the depth.
  for (int depth = 1; depth <= 6; ++depth)
  {
    DeformationContext ctx{5, 0, depth};
    Element x = U.e(0) * Rational(5);
    out.require(U.multiply(U.exp_truncated(x, ctx), U.exp_truncated(-x, ctx)).truncated(depth) == U.one(),
                "exp(x)exp(-x) at depth " + std::to_string(depth));
  }
  // General x: the residual is the tail Σ_{k>D} c_k x^k of the truncated series product.
  const auto& A2 = *algebra('A', 2);
  Element y = A2.e(0) + A2.f(A2.roots().require_root({1, 1})) + A2.h(1) * Rational(2);
  for (int D = 2; D <= 4; ++D)
  {
    DeformationContext ctx{5, 0, D};
    Element x = y * Rational(5);
    Element residual = A2.multiply(A2.exp_truncated(x, ctx), A2.exp_truncated(-x, ctx)) - A2.one();
    Element tail;
    for (int k = D + 1; k <= 2 * D; ++k)
    {
      Rational ck = 0;
      for (int j = k - D; j <= D; ++j)
        ck += Rational((k - j) % 2 == 0 ? 1 : -1) / (Rational(factorial(j)) * Rational(factorial(k - j)));
      tail += A2.power(x, k) * ck;
    }
    out.require(residual == tail, "exp residual at depth " + std::to_string(D));
  }
}

void linkage(Outcome& out)
{
  int points = 0;
  for (auto label : {"A2", "B2"})
  {
    auto rs = RootSystem::from_label(label);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j, ++points)
      {
        Weight w = weight({ratio(i - 5, 2), ratio(j - 4, 2)});
        if (!weight_admissible(w, 5, 0).admissible)
          continue;
        auto orbit = rs.dot_orbit(w);
        long dominant = std::count_if(orbit.begin(), orbit.end(),
                                      [&](const Weight& mu) { return rs.is_dominant_integral(mu); });
        out.require(dominant <= 1, std::string(label) + " orbit of " + w.str() + " has several dominant weights");
      }
  }
  out.require(points >= 100, "grid too small");
}

void classifier(Outcome& out)
{
  auto U = algebra('A', 2);
  const auto& rs = U->roots();
  int covered = 0;
  for (int i = -16; i <= 16; ++i)
    for (int j = -16; j <= 16; ++j)
    {
      Weight w = weight({ratio(i, 4), ratio(j, 4)});
      if (rs.is_dominant_integral(w))
        continue;
      try
      {
        auto rep = classify_sl3(U, w, 5, 0);
        bool ok = rep.all_checks_pass();
        for (const auto& c : rep.certificates)
          ok = ok && verify_certificate(U, c);
        out.require(ok, "certificate fails to verify at " + w.str());
        ++covered;
      }
      catch (const std::exception& e)
      {
        out.require(false, "classify failed at " + w.str() + ": " + e.what());
      }
    }
  out.require(covered >= 400, "fewer than 400 grid points classified");

  auto r1 = classify_sl3(U, weight({ratio(1, 2), -1}), 5, 0);
  out.require(r1.kind == WeightCase::singular && r1.certificates.size() == 1 &&
                  r1.certificates[0].kind == Certificate::Kind::condition_star_star && r1.certificates[0].subset.empty(),
              "λ = ω₁/2 − ω₂ is not a singular (**) case");
  auto r2 = classify_sl3(U, weight({2, -1}), 5, 0);
  out.require(r2.kind == WeightCase::singular && r2.certificates.size() == 1 &&
                  r2.certificates[0].kind == Certificate::Kind::condition_star &&
                  r2.certificates[0].subset == SimpleSubset{0},
              "λ = 2ω₁ − ω₂ is not a singular (*) case with I = {α}");
  auto r3 = classify_sl3(U, weight({-2, 3}), 5, 0);
  out.require(r3.kind == WeightCase::regular_integral && r3.chain.size() == 2 && r3.chain[1] == weight({0, 2}) &&
                  r3.certificates.back().kind == Certificate::Kind::case3_extension,
              "λ = −2ω₁ + 3ω₂ does not reflect to 2ω₂");
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"Chevalley relations and C symmetry (A1 A2 A3 B2 G2)", chevalley},
      {"PBW associativity, normal-form idempotence, weight multiplicativity", pbw},
      {"Verma characters equal Kostant partitions (A2 G2, depth 6)", verma_kostant},
      {"sl2 calibration: simple dims and generic simplicity", sl2_calibration},
      {"regular integral character additivity to depth 6", case3_additivity},
      {"reflection identity for s <= 10", reflection_identity},
      {"Jantzen conditions (*) and (**)", jantzen_suite},
      {"generalized Verma region and Levi Gram ranks", gvm_region},
      {"phi_c homomorphism, surjectivity and highest weight scalar", phi_c},
      {"good primes and order independence", good_primes},
      {"Iwasawa lowest terms and exp inverse", iwasawa},
      {"linkage: one dominant integral weight per dot orbit", linkage},
      {"sl3 classifier totality", classifier},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k)
  {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try
    {
      criteria[k].second(out);
    }
    catch (const std::exception& e)
    {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < 60.0, "exceeded 60 s");
    all = all && out.passed();
    std::ostringstream line;
    line << (out.passed() ? "[PASS] " : "[FAIL] ") << (k + 1) << ". " << criteria[k].first << " (" << out.checks()
         << " checks, " << std::fixed;
    line.precision(2);
    line << secs << " s)";
    if (!out.passed())
      line << ": " << out.first();
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
