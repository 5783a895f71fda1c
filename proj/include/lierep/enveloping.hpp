#ifndef LIEREP_ENVELOPING_HPP
#define LIEREP_ENVELOPING_HPP

#include "lierep/chevalley.hpp"
#include "lierep/rational.hpp"
#include "lierep/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lierep
{

/// Exponents of a PBW monomial, indexed by letter position (see Enveloping).
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Element of U(g) as a sparse combination of normal-ordered PBW monomials.
class Element
{
public:
  Element() = default;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const Rational& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted)
    {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& m) const
  {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest total degree among terms; −1 for zero.
  int degree() const
  {
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, lierep::degree(m));
    return d;
  }

  /// Smallest total degree among terms; −1 for zero.
  int min_degree() const
  {
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = d < 0 ? lierep::degree(m) : std::min(d, lierep::degree(m));
    return d;
  }

  /// Terms of total degree exactly d.
  Element homogeneous_part(int d) const
  {
    Element out;
    for (const auto& [m, c] : terms_)
      if (lierep::degree(m) == d)
        out.terms_.emplace(m, c);
    return out;
  }

  Element truncated(int depth) const
  {
    Element out;
    for (const auto& [m, c] : terms_)
      if (lierep::degree(m) <= depth)
        out.terms_.emplace(m, c);
    return out;
  }

  Element& operator+=(const Element& o)
  {
    for (const auto& [m, c] : o.terms_)
      add(m, c);
    return *this;
  }
  Element& operator-=(const Element& o)
  {
    for (const auto& [m, c] : o.terms_)
      add(m, -c);
    return *this;
  }
  Element& operator*=(const Rational& s)
  {
    if (s == 0)
      terms_.clear();
    else
      for (auto& [m, c] : terms_)
        c *= s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  bool operator==(const Element&) const = default;

private:
  std::map<Monomial, Rational> terms_;
};

/// Prime, deformation parameter and truncation degree.
struct DeformationContext
{
  long p = 5;
  long n = 0;
  int depth = 4;

  void validate() const
  {
    if (p == 2 || !is_prime(p))
      throw PreconditionError("deformation prime must be an odd prime");
    if (n < 0)
      throw PreconditionError("deformation parameter must be non-negative");
    if (depth < 1)
      throw PreconditionError("truncation depth must be at least 1");
  }
};

/// PBW arithmetic in U(g) for a Chevalley basis.
///
/// Letters are numbered in normal order: positions 0..N−1 hold f_β for β ∈ Φ⁺
/// in descending base order, then h_{α_1}..h_{α_r}, then e_β in ascending base
/// order. A monomial lists one exponent per position. Products are rewritten
/// with x·y = y·x + [x, y] whenever x sits to the right of y in normal order.
class Enveloping
{
public:
  enum class LetterKind
  {
    f,
    h,
    e
  };

  explicit Enveloping(std::shared_ptr<const StructureConstants> sc)
      : sc_(std::move(sc)), np_(static_cast<int>(sc_->roots().num_positive())), rank_(sc_->roots().rank())
  {
  }

  const RootSystem& roots() const { return sc_->roots(); }
  const StructureConstants& constants() const { return *sc_; }
  std::shared_ptr<const StructureConstants> constants_ptr() const { return sc_; }

  int num_letters() const { return 2 * np_ + rank_; }
  int f_letter(int k) const { return np_ - 1 - k; }
  int h_letter(int i) const { return np_ + i; }
  int e_letter(int k) const { return np_ + rank_ + k; }

  LetterKind kind(int letter) const
  {
    if (letter < np_)
      return LetterKind::f;
    if (letter < np_ + rank_)
      return LetterKind::h;
    return LetterKind::e;
  }

  /// Positive root index of an e or f letter, or the simple index of an h letter.
  int letter_index(int letter) const
  {
    switch (kind(letter))
    {
    case LetterKind::f: return np_ - 1 - letter;
    case LetterKind::h: return letter - np_;
    case LetterKind::e: return letter - np_ - rank_;
    }
    return -1;
  }

  Monomial unit_monomial() const { return Monomial(num_letters(), 0); }

  Element one() const
  {
    Element x;
    x.add(unit_monomial(), 1);
    return x;
  }

  Element scalar(const Rational& c) const { return one() * c; }

  Element letter(int l) const
  {
    Element x;
    Monomial m = unit_monomial();
    m[l] = 1;
    x.add(m, 1);
    return x;
  }

  Element e(int k) const { return letter(e_letter(k)); }
  Element f(int k) const { return letter(f_letter(k)); }
  Element h(int i) const { return letter(h_letter(i)); }

  /// Root vector x_γ for any root index (e_γ or f_{−γ}).
  Element root_vector(int gamma) const
  {
    const auto& rs = roots();
    return rs.is_positive(gamma) ? e(gamma) : f(rs.negative(gamma));
  }

  /// h_α for any root α, as a combination of the h_{α_i}.
  Element coroot_element(int alpha) const
  {
    Element x;
    const auto& c = roots().coroot(alpha);
    for (int i = 0; i < rank_; ++i)
      x += h(i) * Rational(c[i]);
    return x;
  }

  /// h^β, the element of h with α(h^β) = δ_{αβ} on simple roots.
  Element dual_h(int beta) const
  {
    Matrix m = roots().dual_h_basis();
    Element x;
    for (int a = 0; a < rank_; ++a)
      x += h(a) * m(beta, a);
    return x;
  }

  /// x^s / s! for a single letter.
  Element divided_power(int l, int s) const
  {
    Element x;
    Monomial m = unit_monomial();
    m[l] = s;
    x.add(m, Rational(1) / Rational(factorial(s)));
    return x;
  }

  /// Letter sequence of a normal monomial, left to right.
  std::vector<int> word(const Monomial& m) const
  {
    std::vector<int> w;
    for (int l = 0; l < num_letters(); ++l)
      for (int k = 0; k < m[l]; ++k)
        w.push_back(l);
    return w;
  }

  /// Normal form of an arbitrary word of letters.
  Element word_product(std::span<const int> letters) const
  {
    Element cur = one();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      cur = left_mul(*it, cur);
    return cur;
  }

  /// letter · x.
  Element left_mul(int l, const Element& x) const
  {
    Element out;
    for (const auto& [m, c] : x.terms())
      out += left_mul(l, m) * c;
    return out;
  }

  /// letter · m for a normal monomial m, memoized.
  Element left_mul(int l, const Monomial& m) const
  {
    int first = 0;
    while (first < num_letters() && m[first] == 0)
      ++first;
    if (l <= first)
    {
      Element out;
      Monomial r = m;
      ++r[l];
      out.add(r, 1);
      return out;
    }
    auto key = std::make_pair(l, m);
    {
      std::lock_guard lock(cache_mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end())
        return it->second;
    }
    // x_l x_j m' = x_j (x_l m') + [x_l, x_j] m'
    Monomial rest = m;
    --rest[first];
    Element out = left_mul(first, left_mul(l, rest));
    Element br = bracket_letters(l, first);
    for (const auto& [k, c] : br.terms())
    {
      int kl = 0;
      while (k[kl] == 0)
        ++kl;
      out += left_mul(kl, rest) * c;
    }
    std::lock_guard lock(cache_mutex_);
    cache_.try_emplace(key, out);
    return out;
  }

  /// [x_a, x_b] as a degree-one element.
  Element bracket_letters(int a, int b) const
  {
    Element out;
    for (const auto& [idx, c] : sc_->bracket(lie_index(a), lie_index(b)))
      out += letter(letter_of_lie_index(idx)) * Rational(c);
    return out;
  }

  /// Normal-ordered product; terms of degree above `depth` are dropped after
  /// the exact product has been formed.
  Element multiply(const Element& a, const Element& b, std::optional<int> depth = std::nullopt) const
  {
    Element out;
    for (const auto& [m, c] : a.terms())
    {
      Element cur = b;
      auto w = word(m);
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = left_mul(*it, cur);
      out += cur * c;
    }
    return depth ? out.truncated(*depth) : out;
  }

  Element power(const Element& x, int k, std::optional<int> depth = std::nullopt) const
  {
    Element out = one();
    for (int i = 0; i < k; ++i)
      out = multiply(out, x, depth);
    return out;
  }

  /// Commutator ab − ba.
  Element commutator(const Element& a, const Element& b) const { return multiply(a, b) - multiply(b, a); }

  /// Transpose anti-automorphism: e_β ↔ f_β, h fixed. With the chosen letter
  /// order it sends the normal monomial f^s h^t e^u to f^u h^t e^s.
  Element tau(const Element& x) const
  {
    Element out;
    for (const auto& [m, c] : x.terms())
    {
      Monomial r = m;
      for (int k = 0; k < np_; ++k)
      {
        r[f_letter(k)] = m[e_letter(k)];
        r[e_letter(k)] = m[f_letter(k)];
      }
      out.add(r, c);
    }
    return out;
  }

  /// ad(h)-weight in the root lattice: Σ u·roots − Σ s·roots.
  RootVector weight_of_monomial(const Monomial& m) const
  {
    RootVector w(rank_, 0);
    const auto& rs = roots();
    for (int k = 0; k < np_; ++k)
    {
      int d = m[e_letter(k)] - m[f_letter(k)];
      if (d != 0)
        for (int i = 0; i < rank_; ++i)
          w[i] += d * rs.root(k)[i];
    }
    return w;
  }

  std::map<RootVector, Element> weight_components(const Element& x) const
  {
    std::map<RootVector, Element> out;
    for (const auto& [m, c] : x.terms())
      out[weight_of_monomial(m)].add(m, c);
    return out;
  }

  /// Largest i with x ∈ p^i·U(p^n g_R) on the PBW lattice basis:
  /// min over terms of v_p(c) − n·deg; kInfiniteValuation for zero.
  long gamma_level(const Element& x, const DeformationContext& ctx) const
  {
    long level = kInfiniteValuation;
    for (const auto& [m, c] : x.terms())
      level = std::min(level, valuation(c, static_cast<unsigned long>(ctx.p)) - ctx.n * lierep::degree(m));
    return level;
  }

  /// Σ_{j ≤ depth} x^j / j! for x of degree one with gamma level at least 1.
  Element exp_truncated(const Element& x, const DeformationContext& ctx) const
  {
    ctx.validate();
    for (const auto& [m, c] : x.terms())
      if (lierep::degree(m) != 1)
        throw PreconditionError("exponential needs a degree-one element");
    if (!x.is_zero() && gamma_level(x, ctx) < 1)
      throw PreconditionError("exponential argument must have gamma level at least 1");
    Element out = one();
    Element term = one();
    for (int j = 1; j <= ctx.depth; ++j)
    {
      term = multiply(term, x) * (Rational(1) / j);
      out += term;
    }
    return out;
  }

  /// Π (exp(p^{n+1} x_i) − 1)^{s_i} in the given order, truncated at ctx.depth.
  Element iwasawa_generator_monomial(std::span<const int> s, std::span<const Element> basis,
                                     const DeformationContext& ctx) const
  {
    ctx.validate();
    if (s.size() != basis.size())
      throw PreconditionError("exponent vector and basis differ in length");
    int total = 0;
    for (int k : s)
    {
      if (k < 0)
        throw PreconditionError("negative exponent");
      total += k;
    }
    if (total > ctx.depth)
      throw PreconditionError("depth exhausted");
    Rational scale = rational_power(Rational(ctx.p), static_cast<unsigned long>(ctx.n + 1));
    Element out = one();
    for (std::size_t i = 0; i < s.size(); ++i)
    {
      if (s[i] == 0)
        continue;
      Element g = exp_truncated(basis[i] * scale, ctx) - one();
      for (int k = 0; k < s[i]; ++k)
        out = multiply(out, g, ctx.depth);
    }
    return out;
  }

  /// All monomials of total degree ≤ d.
  std::vector<Monomial> monomials_up_to(int d) const
  {
    std::vector<Monomial> out;
    Monomial cur = unit_monomial();
    enumerate(0, d, cur, out);
    return out;
  }

  std::size_t cache_size() const
  {
    std::lock_guard lock(cache_mutex_);
    return cache_.size();
  }

private:
  int lie_index(int letter) const
  {
    switch (kind(letter))
    {
    case LetterKind::f: return roots().negative(letter_index(letter));
    case LetterKind::h: return sc_->h_index(letter_index(letter));
    case LetterKind::e: return letter_index(letter);
    }
    return -1;
  }

  int letter_of_lie_index(int idx) const
  {
    const auto& rs = roots();
    if (idx >= static_cast<int>(rs.num_roots()))
      return h_letter(idx - static_cast<int>(rs.num_roots()));
    return rs.is_positive(idx) ? e_letter(idx) : f_letter(rs.negative(idx));
  }

  void enumerate(int pos, int budget, Monomial& cur, std::vector<Monomial>& out) const
  {
    if (pos == num_letters())
    {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= budget; ++k)
    {
      cur[pos] = k;
      enumerate(pos + 1, budget - k, cur, out);
    }
    cur[pos] = 0;
  }

  std::shared_ptr<const StructureConstants> sc_;
  int np_;
  int rank_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, Monomial>, Element> cache_;
};

/// Builds the structure constants and the enveloping algebra for a root system.
inline std::shared_ptr<const Enveloping> make_enveloping(const RootSystem& rs)
{
  auto sc = std::make_shared<const StructureConstants>(std::make_shared<const RootSystem>(rs));
  return std::make_shared<const Enveloping>(sc);
}

} // namespace lierep

#endif // LIEREP_ENVELOPING_HPP
