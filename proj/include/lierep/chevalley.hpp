#ifndef LIEREP_CHEVALLEY_HPP
#define LIEREP_CHEVALLEY_HPP

#include "lierep/matrix.hpp"
#include "lierep/root_system.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lierep
{

/// Sparse integer combination of Chevalley basis vectors. Indices below
/// num_roots() are root vectors x_γ (e_γ for γ > 0, f_{−γ} for γ < 0); index
/// num_roots() + i is h_{α_i}.
using LieVector = std::map<int, long>;

/// Integral structure constants C_{α,β} of a Chevalley basis:
/// [e_α, e_β] = C_{α,β} e_{α+β}, [e_α, e_{−α}] = h_α, [h, e_β] = β(h) e_β.
///
/// Signs are fixed by declaring C_{α,β} = +(p+1) on every extraspecial pair
/// (α, β) of positive roots, where α is the least root in base order with
/// ξ − α ∈ Φ⁺ and p is the length of the α-string below β; the remaining
/// constants follow from C_{−α,−β} = −C_{α,β}, antisymmetry, the
/// three-root relation and the four-root relation.
class StructureConstants
{
public:
  explicit StructureConstants(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs))
  {
    const int n = static_cast<int>(rs_->num_roots());
    table_.assign(n * n, 0);
    special_.assign(n * n, std::nullopt);
    build_special_pairs();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table_[a * n + b] = derive(a, b);
    special_.clear();
  }

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }

  /// C_{α,β} for root indices; 0 when α + β ∉ Φ.
  long operator()(int alpha, int beta) const { return table_[alpha * rs_->num_roots() + beta]; }

  /// Overwrites a single entry (and nothing else); used to build corrupted
  /// tables for negative tests of the verifier.
  void set(int alpha, int beta, long value) { table_[alpha * rs_->num_roots() + beta] = value; }

  std::size_t dimension() const { return rs_->num_roots() + rs_->rank(); }
  int h_index(int i) const { return static_cast<int>(rs_->num_roots()) + i; }

  /// h_α for any root α as a combination of the h_{α_i}.
  LieVector coroot_vector(int alpha) const
  {
    LieVector v;
    const auto& c = rs_->coroot(alpha);
    for (int i = 0; i < rs_->rank(); ++i)
      if (c[i] != 0)
        v[h_index(i)] = c[i];
    return v;
  }

  /// Lie bracket of two basis vectors.
  LieVector bracket(int x, int y) const
  {
    const int n = static_cast<int>(rs_->num_roots());
    LieVector out;
    if (x >= n && y >= n)
      return out;
    if (x >= n)
    {
      long c = rs_->pairing(y, rs_->simple_root_index(x - n));
      if (c != 0)
        out[y] = c;
      return out;
    }
    if (y >= n)
    {
      long c = rs_->pairing(x, rs_->simple_root_index(y - n));
      if (c != 0)
        out[x] = -c;
      return out;
    }
    if (rs_->negative(x) == y)
      return coroot_vector(x);
    long c = (*this)(x, y);
    if (c != 0)
      out[rs_->require_root(rs_->root(x) + rs_->root(y))] = c;
    return out;
  }

  LieVector bracket(const LieVector& u, const LieVector& v) const
  {
    LieVector out;
    for (const auto& [i, a] : u)
      for (const auto& [j, b] : v)
        for (const auto& [k, c] : bracket(i, j))
          accumulate(out, k, a * b * c);
    return out;
  }

  /// Matrix of ad(x) on the basis (root vectors, then h's): column j holds [x, b_j].
  Matrix ad_matrix(int x) const
  {
    const std::size_t d = dimension();
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [i, c] : bracket(x, static_cast<int>(j)))
        m(i, j) = c;
    return m;
  }

  static void accumulate(LieVector& v, int k, long c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted && (it->second += c) == 0)
      v.erase(it);
  }

private:
  void build_special_pairs()
  {
    const auto& rs = *rs_;
    const int np = static_cast<int>(rs.num_positive());
    const int n = static_cast<int>(rs.num_roots());
    for (int xi = 0; xi < np; ++xi)
    {
      std::vector<std::pair<int, int>> pairs;
      for (int z = 0; z < np; ++z)
        for (int e = z + 1; e < np; ++e)
          if (rs.root(z) + rs.root(e) == rs.root(xi))
            pairs.emplace_back(z, e);
      if (pairs.empty())
        continue;
      auto [a, b] = pairs.front();
      special_[a * n + b] = string_below(a, b) + 1;
      for (std::size_t k = 1; k < pairs.size(); ++k)
      {
        auto [z, e] = pairs[k];
        // Four-root relation on (α, β, −ζ, −η).
        Rational sum = 0;
        auto term = [&](int r1, int r2, int r3, int r4, const RootVector& mid) {
          auto m = rs.root_index(mid);
          if (!m)
            return;
          sum += Rational(lookup(r1, r2) * lookup(r3, r4)) / rs.half_norm(*m);
        };
        int nz = rs.negative(z), ne = rs.negative(e);
        term(b, nz, a, ne, rs.root(b) - rs.root(z));
        term(nz, a, b, ne, rs.root(a) - rs.root(z));
        Rational value = sum * rs.half_norm(xi) / lookup(a, b);
        if (!is_integer(value))
          throw std::logic_error("non-integral structure constant");
        special_[z * n + e] = value.get_num().get_si();
      }
    }
  }

  int string_below(int alpha, int beta) const
  {
    int p = 0;
    RootVector v = rs_->root(beta);
    while (true)
    {
      v = v - rs_->root(alpha);
      if (!rs_->is_root(v))
        return p;
      ++p;
    }
  }

  /// N_{α,β} from special-pair values, valid once every special pair with
  /// smaller sum height is known.
  long lookup(int a, int b) const
  {
    const auto& rs = *rs_;
    const int n = static_cast<int>(rs.num_roots());
    auto sum = rs.root_index(rs.root(a) + rs.root(b));
    if (!sum)
      return 0;
    bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb)
    {
      if (a < b)
        return special_[a * n + b].value();
      return -special_[b * n + a].value();
    }
    if (!pa && !pb)
      return -lookup(rs.negative(a), rs.negative(b));
    if (!pa)
      return -lookup(b, a);
    // α > 0 > β, α + β = δ; with γ = −δ: N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β).
    int gamma = rs.negative(*sum);
    long num, den;
    if (rs.is_positive(*sum))
    {
      num = rs.half_norm(gamma) * lookup(b, gamma);
      den = rs.half_norm(a);
    }
    else
    {
      num = rs.half_norm(gamma) * lookup(gamma, a);
      den = rs.half_norm(b);
    }
    if (num % den != 0)
      throw std::logic_error("non-integral structure constant");
    return num / den;
  }

  long derive(int a, int b) const { return lookup(a, b); }

  std::shared_ptr<const RootSystem> rs_;
  std::vector<long> table_;
  std::vector<std::optional<long>> special_;
};

/// Outcome of one relation class in verify_chevalley.
struct RelationCheck
{
  std::string relation;
  bool passed = true;
  std::string counterexample;

  RelationCheck() = default;
  explicit RelationCheck(std::string name) : relation(std::move(name)) {}
};

struct ChevalleyReport
{
  std::vector<RelationCheck> checks;
  bool all_passed() const
  {
    for (const auto& c : checks)
      if (!c.passed)
        return false;
    return true;
  }
  const RelationCheck* find(const std::string& name) const
  {
    for (const auto& c : checks)
      if (c.relation == name)
        return &c;
    return nullptr;
  }
};

namespace detail
{

inline std::string root_str(const RootSystem& rs, int k)
{
  std::string s = "(";
  const auto& v = rs.root(k);
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string basis_str(const StructureConstants& sc, int x)
{
  const auto& rs = sc.roots();
  const int n = static_cast<int>(rs.num_roots());
  if (x >= n)
    return "h" + std::to_string(x - n + 1);
  return (rs.is_positive(x) ? "e" : "f") + root_str(rs, rs.is_positive(x) ? x : rs.negative(x));
}

} // namespace detail

/// Checks every defining relation of a Chevalley basis against the table,
/// plus antisymmetry, C_{α,β} = C_{−β,−α}, |C_{α,β}| = r+1, consistency of
/// [e_α, e_{−β}] with root addition, and the Jacobi identity on all triples of
/// basis vectors.
inline ChevalleyReport verify_chevalley(const StructureConstants& sc)
{
  const auto& rs = sc.roots();
  const int n = static_cast<int>(rs.num_roots());
  const int np = static_cast<int>(rs.num_positive());
  const int d = static_cast<int>(sc.dimension());
  ChevalleyReport report;
  auto fail = [](RelationCheck& c, std::string msg) {
    if (c.passed)
    {
      c.passed = false;
      c.counterexample = std::move(msg);
    }
  };
  using detail::basis_str;

  RelationCheck hh{"[h,h]=0"};
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (!sc.bracket(sc.h_index(i), sc.h_index(j)).empty())
        fail(hh, "[h" + std::to_string(i + 1) + ",h" + std::to_string(j + 1) + "]");
  report.checks.push_back(hh);

  RelationCheck he{"[h_a,e_b]=<b,a^>e_b"}, hf{"[h_a,f_b]=-<b,a^>f_b"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < np; ++b)
    {
      LieVector lhs_e = sc.bracket(sc.coroot_vector(a), LieVector{{b, 1}});
      LieVector rhs_e;
      StructureConstants::accumulate(rhs_e, b, rs.pairing(b, a));
      if (lhs_e != rhs_e)
        fail(he, "h" + detail::root_str(rs, a) + " on " + basis_str(sc, b));
      int fb = rs.negative(b);
      LieVector lhs_f = sc.bracket(sc.coroot_vector(a), LieVector{{fb, 1}});
      LieVector rhs_f;
      StructureConstants::accumulate(rhs_f, fb, -rs.pairing(b, a));
      if (lhs_f != rhs_f)
        fail(hf, "h" + detail::root_str(rs, a) + " on " + basis_str(sc, fb));
    }
  report.checks.push_back(he);
  report.checks.push_back(hf);

  RelationCheck ef{"[e_a,f_a]=h_a"};
  for (int a = 0; a < np; ++a)
    if (sc.bracket(a, rs.negative(a)) != sc.coroot_vector(a))
      fail(ef, basis_str(sc, a));
  report.checks.push_back(ef);

  RelationCheck ee{"[e_a,e_b]=C_ab e_(a+b)"}, anti{"C_ab=-C_ba"}, sym{"C_ab=C_(-b)(-a)"},
      mag{"|C_ab|=r+1"}, mixed{"[e_a,e_-b] support"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
    {
      if (a == b || rs.negative(a) == b)
        continue;
      bool sum_root = rs.is_root(rs.root(a) + rs.root(b));
      long c = sc(a, b);
      std::string tag = "(" + detail::root_str(rs, a) + "," + detail::root_str(rs, b) + ")";
      if (sum_root != (c != 0))
        fail(rs.is_positive(a) == rs.is_positive(b) ? ee : mixed, tag);
      if (c != -sc(b, a))
        fail(anti, tag);
      if (c != sc(rs.negative(b), rs.negative(a)))
        fail(sym, tag);
      if (sum_root)
      {
        int r = 0;
        RootVector v = rs.root(b);
        while (rs.is_root(v = v - rs.root(a)))
          ++r;
        if (std::labs(c) != r + 1)
          fail(mag, tag);
      }
    }
  report.checks.push_back(ee);
  report.checks.push_back(anti);
  report.checks.push_back(sym);
  report.checks.push_back(mag);
  report.checks.push_back(mixed);

  RelationCheck jac{"Jacobi"};
  for (int x = 0; x < d && jac.passed; ++x)
    for (int y = 0; y < d && jac.passed; ++y)
      for (int z = 0; z < d && jac.passed; ++z)
      {
        LieVector total;
        auto add = [&](int p, int q, int r) {
          for (const auto& [k, c] : sc.bracket(LieVector{{p, 1}}, sc.bracket(q, r)))
            StructureConstants::accumulate(total, k, c);
        };
        add(x, y, z);
        add(y, z, x);
        add(z, x, y);
        if (!total.empty())
          fail(jac, basis_str(sc, x) + "," + basis_str(sc, y) + "," + basis_str(sc, z));
      }
  report.checks.push_back(jac);
  return report;
}

} // namespace lierep

#endif // LIEREP_CHEVALLEY_HPP
