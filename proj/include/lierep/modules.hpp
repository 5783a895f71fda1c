#ifndef LIEREP_MODULES_HPP
#define LIEREP_MODULES_HPP

#include "lierep/enveloping.hpp"
#include "lierep/matrix.hpp"
#include "lierep/root_system.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lierep
{

/// Basis label f^s·T^t·v. `f` is a full-length PBW monomial supported on f
/// letters; `t` holds exponents of the central variables (empty unless the
/// module has free central directions).
struct ModuleLabel
{
  Monomial f;
  std::vector<int> t;

  auto operator<=>(const ModuleLabel&) const = default;
  bool operator==(const ModuleLabel&) const = default;
};

using ModuleVector = std::map<ModuleLabel, Rational>;

inline void add_term(ModuleVector& v, const ModuleLabel& label, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = v.try_emplace(label, c);
  if (!inserted)
  {
    it->second += c;
    if (it->second == 0)
      v.erase(it);
  }
}

/// Weight-space dimensions of a truncated module, keyed both by the depth
/// vector ν and by the weight λ − ν.
struct Character
{
  Weight highest_weight;
  int depth = 0;
  std::map<RootVector, long> by_nu;
  std::map<Weight, long> by_weight;

  long dim(const Weight& w) const
  {
    auto it = by_weight.find(w);
    return it == by_weight.end() ? 0 : it->second;
  }

  long dim_nu(const RootVector& nu) const
  {
    auto it = by_nu.find(nu);
    return it == by_nu.end() ? 0 : it->second;
  }

  long total() const
  {
    long s = 0;
    for (const auto& [nu, d] : by_nu)
      s += d;
    return s;
  }

  void set(const RootSystem& rs, const RootVector& nu, long d)
  {
    by_nu[nu] = d;
    by_weight[highest_weight - rs.to_weight(nu)] = d;
  }
};

/// ν ∈ ℕ₀J with |ν| ≤ depth, ordered by height then lexicographically.
inline std::vector<RootVector> depth_vectors(int rank, const SimpleSubset& J, int depth)
{
  std::vector<RootVector> out;
  RootVector cur(rank, 0);
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == rank)
    {
      out.push_back(cur);
      return;
    }
    int top = J.contains(i) ? budget : 0;
    for (int k = 0; k <= top; ++k)
    {
      cur[i] = k;
      self(self, i + 1, budget - k);
    }
    cur[i] = 0;
  };
  rec(rec, 0, depth);
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

/// Number of ways to write ν as an ℕ₀-combination of the given positive
/// roots (all of Φ⁺ by default), by enumerating multisets.
inline long kostant_partition(const RootSystem& rs, const RootVector& nu,
                              std::optional<std::vector<int>> roots = std::nullopt)
{
  std::vector<int> list;
  if (roots)
    list = *roots;
  else
    for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
      list.push_back(k);
  for (int x : nu)
    if (x < 0)
      return 0;
  RootVector rest = nu;
  auto rec = [&](auto&& self, std::size_t i) -> long {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }))
      return 1;
    if (i == list.size())
      return 0;
    long count = self(self, i + 1);
    const auto& r = rs.root(list[i]);
    int taken = 0;
    while (true)
    {
      bool fits = true;
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (rest[j] < r[j])
          fits = false;
      if (!fits)
        break;
      rest = rest - r;
      ++taken;
      count += self(self, i + 1);
    }
    for (int k = 0; k < taken; ++k)
      rest = rest + r;
    return count;
  };
  return rec(rec, 0);
}

/// Weyl dimension formula Π ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩ over α ∈ Φ⁺.
inline Integer weyl_dim(const RootSystem& rs, const Weight& lambda)
{
  if (!rs.is_dominant_integral(lambda))
    throw PreconditionError("Weyl dimension needs a dominant integral weight");
  Rational d = 1;
  Weight shifted = lambda + rs.rho();
  for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
    d *= rs.pairing(shifted, k) / rs.pairing(rs.rho(), k);
  return d.get_num();
}

/// Shape of a highest-weight module for a Levi subalgebra l_J (J = Δ gives g).
struct ModuleConfig
{
  Weight lambda;
  SimpleSubset levi;
  /// K ⊆ J: the module is divided by the submodule generated by f_β^{λ(h_β)+1}v, β ∈ K.
  SimpleSubset parabolic;
  /// When set, the dual elements h^{α_k} for α_k ∉ J act freely on v
  /// (polynomial variables T_k) instead of by λ(h^{α_k}).
  bool central_free = false;
  int depth = 4;
};

/// Depth-truncated highest-weight module. Vectors are combinations of labels
/// f^s T^t v; actions are computed exactly from PBW rewriting, so truncation
/// only limits which basis labels are enumerated.
class HighestWeightModule
{
public:
  HighestWeightModule(std::shared_ptr<const Enveloping> U, ModuleConfig cfg) : U_(std::move(U)), cfg_(std::move(cfg))
  {
    const auto& rs = U_->roots();
    const int r = rs.rank();
    if (static_cast<int>(cfg_.lambda.rank()) != r)
      throw PreconditionError("weight rank does not match the root system");
    if (cfg_.depth < 0)
      throw PreconditionError("depth must be non-negative");
    if (!cfg_.parabolic.is_subset_of(cfg_.levi))
      throw PreconditionError("parabolic subset must lie in the Levi subset");
    for (int b : cfg_.parabolic.members())
      if (!is_natural0(cfg_.lambda[b]))
        throw PreconditionError("highest weight must be dominant integral on the parabolic subset");
    if (cfg_.central_free)
    {
      if (!cfg_.parabolic.is_subset_of(rs.interior(cfg_.levi)))
        throw PreconditionError("parabolic subset must lie in the interior of the Levi subset");
      central_ = cfg_.levi.complement(r).members();
    }
    allowed_.assign(U_->num_letters(), false);
    for (int l = 0; l < U_->num_letters(); ++l)
    {
      if (U_->kind(l) == Enveloping::LetterKind::h)
        allowed_[l] = true;
      else
        allowed_[l] = cfg_.levi.supports(rs.root(U_->letter_index(l)));
    }
    for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
      if (cfg_.levi.supports(rs.root(k)))
        f_roots_.push_back(k);
    // h_i acts on T^t v as c0_i + Σ_k y_ik T_k.
    std::vector<Rational> dual = rs.dual_values(cfg_.lambda);
    h_const_.assign(r, 0);
    h_linear_.assign(r, std::vector<Rational>(central_.size(), 0));
    for (int i = 0; i < r; ++i)
    {
      h_const_[i] = cfg_.lambda[i];
      for (std::size_t k = 0; k < central_.size(); ++k)
      {
        int a = central_[k];
        h_const_[i] -= rs.cartan()[a][i] * dual[a];
        h_linear_[i][k] = rs.cartan()[a][i];
      }
    }
  }

  const Enveloping& algebra() const { return *U_; }
  std::shared_ptr<const Enveloping> algebra_ptr() const { return U_; }
  const RootSystem& roots() const { return U_->roots(); }
  const ModuleConfig& config() const { return cfg_; }
  const Weight& highest_weight() const { return cfg_.lambda; }
  int depth() const { return cfg_.depth; }
  const std::vector<int>& central_roots() const { return central_; }
  std::size_t num_central() const { return central_.size(); }

  ModuleLabel generator_label() const { return {U_->unit_monomial(), std::vector<int>(central_.size(), 0)}; }

  ModuleVector generator() const
  {
    ModuleVector v;
    v[generator_label()] = 1;
    return v;
  }

  /// Depth vectors ν (weights λ − ν) within the truncation.
  std::vector<RootVector> depth_vectors() const { return lierep::depth_vectors(roots().rank(), cfg_.levi, cfg_.depth); }

  /// f-monomials of weight −ν before the parabolic quotient.
  std::vector<Monomial> free_monomials(const RootVector& nu) const
  {
    std::vector<Monomial> out;
    Monomial cur = U_->unit_monomial();
    RootVector rest = nu;
    const auto& rs = roots();
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; }))
      {
        out.push_back(cur);
        return;
      }
      if (i == f_roots_.size())
        return;
      self(self, i + 1);
      int k = f_roots_[i];
      const auto& r = rs.root(k);
      int taken = 0;
      while (true)
      {
        bool fits = true;
        for (std::size_t j = 0; j < rest.size(); ++j)
          if (rest[j] < r[j])
            fits = false;
        if (!fits)
          break;
        rest = rest - r;
        ++taken;
        cur[U_->f_letter(k)] = taken;
        self(self, i + 1);
      }
      cur[U_->f_letter(k)] = 0;
      for (int t = 0; t < taken; ++t)
        rest = rest + r;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// f-monomials spanning the quotient at depth ν (non-pivot columns).
  std::vector<Monomial> reduced_monomials(const RootVector& nu) const { return space(nu)->reduced; }

  /// Basis labels at depth ν; in free mode all T^t with |ν| + |t| ≤ depth.
  std::vector<ModuleLabel> basis(const RootVector& nu) const
  {
    std::vector<ModuleLabel> out;
    int budget = cfg_.depth - height(nu);
    if (budget < 0)
      return out;
    for (const auto& m : reduced_monomials(nu))
    {
      if (central_.empty())
      {
        out.push_back({m, {}});
        continue;
      }
      std::vector<int> t(central_.size(), 0);
      auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == t.size())
        {
          out.push_back({m, t});
          return;
        }
        for (int k = 0; k <= left; ++k)
        {
          t[i] = k;
          self(self, i + 1, left - k);
        }
        t[i] = 0;
      };
      rec(rec, 0, budget);
    }
    return out;
  }

  Character character() const
  {
    Character ch;
    ch.highest_weight = cfg_.lambda;
    ch.depth = cfg_.depth;
    for (const auto& nu : depth_vectors())
      ch.set(roots(), nu, static_cast<long>(basis(nu).size()));
    return ch;
  }

  /// Depth vector ν of a label.
  RootVector depth_of(const ModuleLabel& label) const { return -U_->weight_of_monomial(label.f); }

  bool acts(const Element& x) const
  {
    for (const auto& [m, c] : x.terms())
      for (int l = 0; l < U_->num_letters(); ++l)
        if (m[l] != 0 && !allowed_[l])
          return false;
    return true;
  }

  /// x·m, reduced modulo the parabolic relations.
  ModuleVector act(const Element& x, const ModuleVector& m) const
  {
    if (!acts(x))
      throw PreconditionError("element does not lie in the enveloping algebra of the Levi subalgebra");
    ModuleVector out;
    for (const auto& [label, coeff] : m)
    {
      Element base;
      base.add(label.f, 1);
      Element prod = U_->multiply(x, base);
      for (const auto& [mono, c] : prod.terms())
        apply_normal_term(mono, c * coeff, label.t, out);
    }
    return reduce(out);
  }

  ModuleVector act(const Element& x, const ModuleLabel& label) const
  {
    ModuleVector m;
    m[label] = 1;
    return act(x, m);
  }

  /// Rewrites a vector in terms of the quotient basis.
  ModuleVector reduce(const ModuleVector& v) const
  {
    if (cfg_.parabolic.empty())
      return v;
    std::map<std::pair<RootVector, std::vector<int>>, ModuleVector> groups;
    for (const auto& [label, c] : v)
      groups[{depth_of(label), label.t}][label] = c;
    ModuleVector out;
    for (auto& [key, part] : groups)
    {
      auto sp = space(key.first);
      for (std::size_t r = 0; r < sp->pivots.size(); ++r)
      {
        const Monomial& pm = sp->monomials[sp->pivots[r]];
        auto it = part.find({pm, key.second});
        if (it == part.end())
          continue;
        Rational c = it->second;
        for (std::size_t j = 0; j < sp->monomials.size(); ++j)
          if (sp->relations(r, j) != 0)
            add_term(part, {sp->monomials[j], key.second}, -c * sp->relations(r, j));
      }
      for (const auto& [label, c] : part)
        add_term(out, label, c);
    }
    return out;
  }

  /// Contravariant form on the depth-ν space: entry (s, t) is the coefficient
  /// of v in τ(f^s)·f^t v.
  Matrix gram(const RootVector& nu) const
  {
    if (cfg_.central_free)
      throw PreconditionError("contravariant form needs scalar central action");
    auto b = reduced_monomials(nu);
    Matrix g(b.size(), b.size());
    ModuleLabel top = generator_label();
    for (std::size_t i = 0; i < b.size(); ++i)
    {
      Element x;
      x.add(b[i], 1);
      Element tx = U_->tau(x);
      for (std::size_t j = 0; j < b.size(); ++j)
      {
        ModuleVector r = act(tx, ModuleLabel{b[j], {}});
        auto it = r.find(top);
        if (it != r.end())
          g(i, j) = it->second;
      }
    }
    return g;
  }

  /// Dimensions of the simple quotient: ranks of the contravariant form.
  Character simple_character() const
  {
    Character ch;
    ch.highest_weight = cfg_.lambda;
    ch.depth = cfg_.depth;
    for (const auto& nu : depth_vectors())
      ch.set(roots(), nu, static_cast<long>(gram(nu).rank()));
    return ch;
  }

private:
  struct Space
  {
    std::vector<Monomial> monomials;
    Matrix relations;
    std::vector<std::size_t> pivots;
    std::vector<Monomial> reduced;
  };

  std::shared_ptr<const Space> space(const RootVector& nu) const
  {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->spaces.find(nu);
      if (it != cache_->spaces.end())
        return it->second;
    }
    auto sp = std::make_shared<Space>();
    sp->monomials = free_monomials(nu);
    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < sp->monomials.size(); ++j)
      index[sp->monomials[j]] = j;
    std::vector<std::vector<Rational>> rows;
    const auto& rs = roots();
    for (int b : cfg_.parabolic.members())
    {
      long k = cfg_.lambda[b].get_num().get_si();
      RootVector shifted = nu;
      shifted[b] -= static_cast<int>(k + 1);
      if (shifted[b] < 0)
        continue;
      Element power;
      Monomial pm = U_->unit_monomial();
      pm[U_->f_letter(rs.simple_root_index(b))] = static_cast<int>(k + 1);
      power.add(pm, 1);
      for (const auto& m : free_monomials(shifted))
      {
        Element left;
        left.add(m, 1);
        Element prod = U_->multiply(left, power);
        std::vector<Rational> row(sp->monomials.size(), 0);
        for (const auto& [mono, c] : prod.terms())
          row[index.at(mono)] += c;
        rows.push_back(std::move(row));
      }
    }
    sp->relations = Matrix(rows.size(), sp->monomials.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        sp->relations(i, j) = rows[i][j];
    sp->pivots = sp->relations.rref();
    std::vector<bool> is_pivot(sp->monomials.size(), false);
    for (auto p : sp->pivots)
      is_pivot[p] = true;
    for (std::size_t j = 0; j < sp->monomials.size(); ++j)
      if (!is_pivot[j])
        sp->reduced.push_back(sp->monomials[j]);
    std::lock_guard lock(cache_->mutex);
    return cache_->spaces.try_emplace(nu, std::move(sp)).first->second;
  }

  /// Adds c · f^a h^b e^u · T^t v to `out`.
  void apply_normal_term(const Monomial& mono, const Rational& c, const std::vector<int>& t, ModuleVector& out) const
  {
    const int r = roots().rank();
    Monomial fpart = U_->unit_monomial();
    for (int l = 0; l < U_->num_letters(); ++l)
    {
      if (mono[l] == 0)
        continue;
      switch (U_->kind(l))
      {
      case Enveloping::LetterKind::e: return;
      case Enveloping::LetterKind::f: fpart[l] = mono[l]; break;
      case Enveloping::LetterKind::h: break;
      }
    }
    // Polynomial in T: product of (c0_i + Σ y_ik T_k)^{b_i}.
    std::map<std::vector<int>, Rational> poly{{t, c}};
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < mono[U_->h_letter(i)]; ++k)
      {
        std::map<std::vector<int>, Rational> next;
        for (const auto& [exps, a] : poly)
        {
          if (h_const_[i] != 0)
            next[exps] += a * h_const_[i];
          for (std::size_t v = 0; v < central_.size(); ++v)
            if (h_linear_[i][v] != 0)
            {
              auto e2 = exps;
              ++e2[v];
              next[e2] += a * h_linear_[i][v];
            }
        }
        poly = std::move(next);
      }
    for (const auto& [exps, a] : poly)
      add_term(out, {fpart, exps}, a);
  }

  std::shared_ptr<const Enveloping> U_;
  ModuleConfig cfg_;
  std::vector<int> central_;
  std::vector<bool> allowed_;
  std::vector<int> f_roots_;
  std::vector<Rational> h_const_;
  std::vector<std::vector<Rational>> h_linear_;
  struct SpaceCache
  {
    std::mutex mutex;
    std::map<RootVector, std::shared_ptr<const Space>> spaces;
  };
  // Shared by copies, which have the same configuration.
  std::shared_ptr<SpaceCache> cache_ = std::make_shared<SpaceCache>();
};

inline HighestWeightModule verma(std::shared_ptr<const Enveloping> U, const Weight& lambda, int depth)
{
  int r = U->roots().rank();
  return HighestWeightModule(std::move(U), {lambda, SimpleSubset::all(r), {}, false, depth});
}

/// Levi-restricted module over l_J: generalised Verma for K ⊆ J with scalar centre.
inline HighestWeightModule levi_module(std::shared_ptr<const Enveloping> U, const SimpleSubset& J,
                                       const SimpleSubset& K, const Weight& lambda, int depth)
{
  return HighestWeightModule(std::move(U), {lambda, J, K, false, depth});
}

/// Contravariant form of the Verma module M(λ) on the λ − ν space.
inline Matrix shapovalov_gram(std::shared_ptr<const Enveloping> U, const Weight& lambda, const RootVector& nu)
{
  return verma(std::move(U), lambda, height(nu)).gram(nu);
}

/// dim L(λ)_{λ−ν} for |ν| ≤ depth, as ranks of the contravariant form. With
/// a proper Levi subset J the simple module is for l_J.
inline Character simple_dims(std::shared_ptr<const Enveloping> U, const Weight& lambda, int depth,
                             std::optional<SimpleSubset> J = std::nullopt)
{
  int r = U->roots().rank();
  return HighestWeightModule(std::move(U), {lambda, J.value_or(SimpleSubset::all(r)), {}, false, depth})
      .simple_character();
}

/// Character of M_I(λ) predicted by its induced construction: Kostant
/// partitions over Φ⁺ ∖ Φ_I⁺ convolved with the weights of the simple
/// l_I-module of highest weight λ.
inline Character induced_character(std::shared_ptr<const Enveloping> U, const SimpleSubset& I, const Weight& lambda,
                                   int depth)
{
  const auto& rs = U->roots();
  Character levi = simple_dims(U, lambda, depth, I);
  std::vector<int> outside;
  for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
    if (!I.supports(rs.root(k)))
      outside.push_back(k);
  Character ch;
  ch.highest_weight = lambda;
  ch.depth = depth;
  for (const auto& nu : depth_vectors(rs.rank(), SimpleSubset::all(rs.rank()), depth))
  {
    long total = 0;
    for (const auto& [nu1, d] : levi.by_nu)
    {
      if (d == 0)
        continue;
      RootVector rest = nu - nu1;
      if (std::any_of(rest.begin(), rest.end(), [](int x) { return x < 0; }))
        continue;
      total += d * kostant_partition(rs, rest, outside);
    }
    ch.set(rs, nu, total);
  }
  return ch;
}

/// M_I(λ) as the quotient of M(λ) by f_α^{λ(h_α)+1}v, α ∈ I. With
/// `cross_check` the character is compared with induced_character and a
/// mismatch raises std::logic_error.
inline HighestWeightModule parabolic_verma(std::shared_ptr<const Enveloping> U, const SimpleSubset& I,
                                           const Weight& lambda, int depth, bool cross_check = true)
{
  int r = U->roots().rank();
  HighestWeightModule m(U, {lambda, SimpleSubset::all(r), I, false, depth});
  if (cross_check)
  {
    Character a = m.character();
    Character b = induced_character(U, I, lambda, depth);
    if (a.by_nu != b.by_nu)
      throw std::logic_error("parabolic quotient disagrees with the induced character");
  }
  return m;
}

/// M_{I°,h'}(λ) over l_I: basis f^s (h^{α_i})^t v with the dual elements
/// h^{α_i}, α_i ∉ I, acting freely. The basis is truncated by |ν| + |t| ≤ depth.
inline HighestWeightModule levi_gvm(std::shared_ptr<const Enveloping> U, const SimpleSubset& I, const Weight& lambda,
                                    int depth)
{
  SimpleSubset interior = U->roots().interior(I);
  for (int b : interior.members())
    if (!is_natural0(lambda[b]))
      throw PreconditionError("highest weight must be dominant integral on the interior");
  return HighestWeightModule(std::move(U), {lambda, I, interior, true, depth});
}

/// For M over g and s indexed by Δ∖I (increasing), checks that
/// f_{α_1}^{s_1}…f_{α_r}^{s_r}·v is killed by every e_γ, γ ∈ Φ_I⁺, and that
/// h acts on it by λ − Σ s_i α_i.
inline bool levi_hw_check(const HighestWeightModule& M, const SimpleSubset& I, std::span<const int> s)
{
  const auto& U = M.algebra();
  const auto& rs = M.roots();
  auto outside = I.complement(rs.rank()).members();
  if (s.size() != outside.size())
    throw PreconditionError("exponent vector must be indexed by the complement of I");
  Element word = U.one();
  RootVector shift(rs.rank(), 0);
  for (std::size_t i = 0; i < outside.size(); ++i)
  {
    word = U.multiply(word, U.power(U.f(rs.simple_root_index(outside[i])), s[i]));
    shift[outside[i]] += s[i];
  }
  if (height(shift) > M.depth())
    throw PreconditionError("vector lies beyond the truncation depth");
  ModuleVector w = M.act(word, M.generator());
  for (int k : rs.positive_subsystem(I))
    if (!M.act(U.e(k), w).empty())
      return false;
  Weight mu = M.highest_weight() - rs.to_weight(shift);
  for (int i = 0; i < rs.rank(); ++i)
  {
    ModuleVector hw = M.act(U.h(i), w);
    ModuleVector expect;
    for (const auto& [label, c] : w)
      add_term(expect, label, c * mu[i]);
    if (hw != expect)
      return false;
  }
  return true;
}

} // namespace lierep

#endif // LIEREP_MODULES_HPP
