#ifndef LIEREP_TOOLS_SUITES_HPP
#define LIEREP_TOOLS_SUITES_HPP

#include "lierep/lierep.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace lierep::suites
{

struct SuiteResult
{
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }

  void require(bool ok, const std::string& what)
  {
    ++checks;
    if (ok)
      return;
    if (failures++ == 0)
      counterexample = what;
  }
};

using Suite = std::function<void(SuiteResult&, int depth)>;

namespace detail
{

inline std::shared_ptr<const Enveloping> algebra(char type, int rank)
{
  static std::map<std::string, std::shared_ptr<const Enveloping>> cache;
  std::string key = std::string(1, type) + std::to_string(rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, make_enveloping(RootSystem::build(type, rank))).first;
  return it->second;
}

inline Weight weight(std::initializer_list<Rational> coords) { return Weight(std::vector<Rational>(coords)); }

inline Rational nonintegral(std::mt19937& rng)
{
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(2, 7);
  while (true)
  {
    Rational q = ratio(num(rng), den(rng));
    if (!is_integer(q))
      return q;
  }
}

inline Element random_element(const Enveloping& U, std::mt19937& rng, int terms, int max_degree)
{
  auto monos = U.monomials_up_to(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Element x;
  for (int k = 0; k < terms; ++k)
    x.add(monos[pick(rng)], ratio(num(rng), den(rng)));
  return x;
}

} // namespace detail

inline void chevalley(SuiteResult& r, int)
{
  for (auto label : {"A1", "A2", "A3", "B2", "G2"})
  {
    auto U = detail::algebra(label[0], label[1] - '0');
    const auto& sc = U->constants();
    const auto& rs = sc.roots();
    for (const auto& check : verify_chevalley(sc).checks)
      r.require(check.passed, std::string(label) + " " + check.relation + ": " + check.counterexample);
    for (int a = 0; a < static_cast<int>(rs.num_roots()); ++a)
      for (int b = 0; b < static_cast<int>(rs.num_roots()); ++b)
        r.require(sc(a, b) == sc(rs.negative(b), rs.negative(a)),
                  std::string(label) + " C(" + lierep::detail::root_str(rs, a) + "," + lierep::detail::root_str(rs, b) + ") != C(-b,-a)");
  }
}

inline void pbw(SuiteResult& r, int depth)
{
  auto U = detail::algebra('A', 2);
  std::mt19937 rng(2024);
  int deg = std::min(depth, 3);
  for (int trial = 0; trial < 40; ++trial)
  {
    Element a = detail::random_element(*U, rng, 2, deg), b = detail::random_element(*U, rng, 2, deg),
            c = detail::random_element(*U, rng, 2, deg);
    r.require(U->multiply(U->multiply(a, b), c) == U->multiply(a, U->multiply(b, c)),
              "associativity fails on trial " + std::to_string(trial));
    for (const auto& [mu, x] : U->weight_components(a))
      for (const auto& [nu, y] : U->weight_components(b))
        for (const auto& [w, part] : U->weight_components(U->multiply(x, y)))
          r.require(w == mu + nu, "weight component product leaves its weight");
  }
  for (const auto& m : U->monomials_up_to(deg))
  {
    Element x;
    x.add(m, 1);
    r.require(U->word_product(U->word(m)) == x, "normal form is not idempotent");
  }
}

inline void verma_kostant(SuiteResult& r, int depth)
{
  std::mt19937 rng(31);
  for (auto [t, k] : {std::pair{'A', 2}, std::pair{'G', 2}})
  {
    auto U = detail::algebra(t, k);
    const auto& rs = U->roots();
    Weight lambda(rs.rank());
    for (auto& c : lambda.coords)
      c = detail::nonintegral(rng);
    auto ch = verma(U, lambda, depth).character();
    for (const auto& nu : depth_vectors(rs.rank(), SimpleSubset::all(rs.rank()), depth))
      r.require(ch.dim_nu(nu) == kostant_partition(rs, nu), rs.label() + " character differs from Kostant");
  }
}

inline void sl2(SuiteResult& r, int depth)
{
  auto U = detail::algebra('A', 1);
  for (int m = 0; m <= 5; ++m)
    r.require(simple_dims(U, detail::weight({m}), std::max(depth, m + 1)).total() == m + 1,
              "dim L(" + std::to_string(m) + ") != " + std::to_string(m + 1));
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial)
  {
    Rational a = detail::nonintegral(rng);
    auto M = verma(U, detail::weight({a}), depth);
    for (int k = 0; k <= depth; ++k)
      r.require(M.gram(RootVector{k}).rank() == M.basis(RootVector{k}).size(),
                "Gram rank deficient for a=" + to_string(a));
  }
}

inline void case3(SuiteResult& r, int depth)
{
  auto U = detail::algebra('A', 2);
  for (auto mu : {detail::weight({0, 0}), detail::weight({1, 0}), detail::weight({1, 1})})
    r.require(case3_character_check(U, mu, U->roots().dot_reflect(1, mu), SimpleSubset{0}, depth),
              "additivity fails for mu=" + mu.str());
}

inline void reflection(SuiteResult& r, int depth)
{
  auto sl2 = detail::algebra('A', 1);
  auto a2 = detail::algebra('A', 2);
  for (Rational a : {Rational(5), ratio(1, 2), ratio(-3, 4), Rational(-2)})
    for (int s = 0; s <= depth; ++s)
    {
      std::string tag = "a=" + to_string(a) + " s=" + std::to_string(s);
      r.require(reflection_formula_check(sl2, detail::weight({a}), 0, s, depth), "sl2 " + tag);
      r.require(reflection_formula_check(a2, detail::weight({a, ratio(2, 7)}), 0, s, depth), "A2 " + tag);
      if (!is_natural0(a) && s > 0)
        r.require(nonvanishing_check(sl2, detail::weight({a}), 0, s, depth).nonzero, "vanishing product " + tag);
    }
}

inline void jantzen(SuiteResult& r, int)
{
  auto rs = RootSystem::build('A', 2);
  for (int a = 0; a <= 3; ++a)
    r.require(condition_star(rs, SimpleSubset{0}, detail::weight({a, -1})).holds,
              "(*) fails for a=" + std::to_string(a));
  for (Rational a : {ratio(1, 2), ratio(-5, 4)})
    r.require(condition_star_star(rs, SimpleSubset{}, detail::weight({a, -1})), "(**) fails for a=" + to_string(a));
  std::mt19937 rng(1234);
  for (auto label : {"A2", "A3", "B2", "G2"})
  {
    auto sys = RootSystem::from_label(label);
    std::uniform_int_distribution<unsigned> mask(0, (1u << sys.rank()) - 1);
    std::uniform_int_distribution<int> nat(0, 3);
    for (int trial = 0; trial < 50; ++trial)
    {
      auto I = SimpleSubset::from_mask(mask(rng));
      Weight w(sys.rank());
      for (int i = 0; i < sys.rank(); ++i)
        w.coords[i] = I.contains(i) ? Rational(nat(rng)) : detail::nonintegral(rng);
      if (condition_star_star(sys, I, w))
        r.require(condition_star(sys, I, w).holds, std::string(label) + " (**) without (*) at " + w.str());
    }
  }
}

inline void gvm(SuiteResult& r, int depth)
{
  auto U = detail::algebra('A', 2);
  const auto& rs = U->roots();
  for (auto lambda : {detail::weight({1, 1}), detail::weight({2, 0})})
  {
    long A = compute_A(rs, rs.root_subsystem(SimpleSubset{0}), lambda);
    for (long c = -A; c > -A - 10; --c)
    {
      std::string tag = "lambda=" + lambda.str() + " c=" + std::to_string(c);
      r.require(gvm_region_irreducible(rs, SimpleSubset{0}, lambda, {c}), "region fails for " + tag);
      PhiMap phi(U, SimpleSubset{0}, lambda, {Rational(c)}, DeformationContext{5, 0, depth});
      for (const auto& nu : depth_vectors(rs.rank(), SimpleSubset{0}, depth))
        r.require(phi.target().gram(nu).rank() == phi.target().basis(nu).size(), "Levi Gram rank deficient for " + tag);
    }
  }
}

inline void phi(SuiteResult& r, int depth)
{
  std::mt19937 rng(4242);
  for (auto [label, mask] : {std::pair{"A2", 1u}, std::pair{"A3", 3u}})
  {
    auto U = detail::algebra(label[0], label[1] - '0');
    const auto& rs = U->roots();
    auto I = SimpleSubset::from_mask(mask);
    auto outside = I.complement(rs.rank()).members();
    int d = rs.rank() > 2 ? std::min(depth, 3) : depth;
    std::vector<Element> gens;
    for (int k : rs.positive_subsystem(I))
    {
      gens.push_back(U->e(k));
      gens.push_back(U->f(k));
    }
    for (int b : outside)
      gens.push_back(U->dual_h(b));
    for (int trial = 0; trial < 20; ++trial)
    {
      Weight lambda(rs.rank());
      for (int i = 0; i < rs.rank(); ++i)
        lambda.coords[i] = rs.interior(I).contains(i) ? Rational(trial % 3) : ratio(trial - 7, 3);
      std::vector<Rational> c(outside.size(), ratio(2 * trial - 13, 7));
      PhiMap map(U, I, lambda, c, DeformationContext{5, 0, d});
      std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
      Element x = U->multiply(gens[g(rng)], gens[g(rng)]);
      ModuleVector m;
      for (const auto& nu : depth_vectors(rs.rank(), I, std::max(d - 2, 0)))
        for (const auto& b : map.source().basis(nu))
          if (label_depth(b, *U) <= d - 2)
            add_term(m, b, ratio(trial + 1, 3));
      r.require(phi_c_homomorphism_check(map, x, m), std::string(label) + " homomorphism fails on trial " +
                                                         std::to_string(trial));
    }
    Weight lambda(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      lambda.coords[i] = rs.interior(I).contains(i) ? Rational(1) : ratio(2, 3);
    PhiMap map(U, I, lambda, std::vector<Rational>(outside.size(), Rational(-3)), DeformationContext{5, 0, d});
    r.require(phi_c_surjective(map, d), std::string(label) + " not surjective");
  }
  auto U = detail::algebra('A', 2);
  Weight lambda = detail::weight({2, ratio(1, 3)});
  r.require(hw_scalar_check(U, SimpleSubset{0}, lambda, {Rational(0)}, 0, DeformationContext{5, 0, depth}), "hw c=0");
  r.require(hw_scalar_check(U, SimpleSubset{0}, lambda, {Rational(-3)}, 0, DeformationContext{5, 0, depth}), "hw c=-3");
  r.require(hw_scalar_check(U, SimpleSubset{0}, lambda, {ratio(1, 5)}, 0, DeformationContext{5, 1, depth}),
            "hw c=1/5");
}

inline void primes(SuiteResult& r, int)
{
  r.require(RootSystem::build('A', 2).bad_primes() == std::set<long>{2, 3}, "bad primes of A2 != {2, 3}");
  r.require(RootSystem::build('A', 1).bad_primes() == std::set<long>{2}, "bad primes of A1 != {2}");
  r.require(RootSystem::build('B', 2).bad_primes() == std::set<long>{2}, "bad primes of B2 != {2}");
  std::mt19937 rng(10);
  for (auto label : {"A2", "A3", "B2", "G2"})
  {
    auto rs = RootSystem::from_label(label);
    std::vector<int> order(rs.num_roots());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    r.require(rs.bad_primes(order) == rs.bad_primes(), std::string(label) + " depends on root order");
  }
}

inline void iwasawa(SuiteResult& r, int depth)
{
  const auto& U = *detail::algebra('A', 1);
  std::vector<Element> basis{U.f(0), U.h(0), U.e(0)};
  int top = std::min(depth, 3);
  for (long n : {0L, 1L})
  {
    DeformationContext ctx{5, n, std::max(depth, top)};
    for (int a = 0; a <= top; ++a)
      for (int b = 0; a + b <= top; ++b)
        for (int c = 0; a + b + c <= top; ++c)
        {
          std::vector<int> s{a, b, c};
          int total = a + b + c;
          Element g = U.iwasawa_generator_monomial(s, basis, ctx);
          Element xs = U.multiply(U.multiply(U.power(U.f(0), a), U.power(U.h(0), b)), U.power(U.e(0), c));
          r.require(g.homogeneous_part(total) == xs * rational_power(Rational(5), (n + 1) * total),
                    "lowest term wrong for s=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
        }
    Element x = U.e(0) * rational_power(Rational(5), n + 1);
    r.require(U.multiply(U.exp_truncated(x, ctx), U.exp_truncated(-x, ctx)).truncated(ctx.depth) == U.one(),
              "exp(x)exp(-x) != 1");
  }
}

inline void linkage(SuiteResult& r, int)
{
  for (auto label : {"A2", "B2", "G2"})
  {
    auto rs = RootSystem::from_label(label);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
      {
        Weight w = detail::weight({ratio(i - 5, 2), ratio(j - 4, 2)});
        auto orbit = rs.dot_orbit(w);
        long dominant = std::count_if(orbit.begin(), orbit.end(),
                                      [&](const Weight& mu) { return rs.is_dominant_integral(mu); });
        r.require(dominant <= 1, std::string(label) + " orbit of " + w.str() + " has several dominant weights");
      }
  }
}

inline void classify(SuiteResult& r, int depth)
{
  auto U = detail::algebra('A', 2);
  const auto& rs = U->roots();
  for (int i = -12; i <= 12; ++i)
    for (int j = -12; j <= 12; ++j)
    {
      Weight w = detail::weight({ratio(i, 3), ratio(j, 3)});
      if (rs.is_dominant_integral(w))
        continue;
      auto rep = classify_sl3(U, w, 5, 0, depth);
      bool ok = rep.all_checks_pass();
      for (const auto& c : rep.certificates)
        ok = ok && verify_certificate(U, c);
      r.require(ok, "certificate fails at " + w.str());
    }
}

inline const std::vector<std::pair<std::string, Suite>>& registry()
{
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"chevalley", chevalley}, {"pbw", pbw},         {"verma", verma_kostant}, {"sl2", sl2},
      {"case3", case3},         {"reflection", reflection}, {"jantzen", jantzen}, {"gvm", gvm},
      {"phi", phi},             {"primes", primes},   {"iwasawa", iwasawa},     {"linkage", linkage},
      {"classify", classify},
  };
  return suites;
}

} // namespace lierep::suites

#endif // LIEREP_TOOLS_SUITES_HPP
