#ifndef LIEREP_ROOT_SYSTEM_HPP
#define LIEREP_ROOT_SYSTEM_HPP

#include "lierep/matrix.hpp"
#include "lierep/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lierep
{

/// Coefficients of a root (or any element of the root lattice) in the simple roots.
using RootVector = std::vector<int>;

inline int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline RootVector operator+(RootVector a, const RootVector& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

inline RootVector operator-(RootVector a, const RootVector& b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

inline RootVector operator-(RootVector a)
{
  for (int& x : a)
    x = -x;
  return a;
}

/// A weight λ stored by its values λ(h_α) on the simple coroots, i.e. in
/// fundamental-weight coordinates.
struct Weight
{
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t rank() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  Weight& operator+=(const Weight& o)
  {
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o)
  {
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] -= o.coords[i];
    return *this;
  }
  Weight& operator*=(const Rational& s)
  {
    for (auto& c : coords)
      c *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator<(const Weight& o) const
  {
    return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(), o.coords.end());
  }

  std::string str() const
  {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i)
    {
      if (i)
        s += ",";
      s += to_string(coords[i]);
    }
    return s;
  }
};

/// A subset of the simple roots, by index.
class SimpleSubset
{
public:
  SimpleSubset() = default;
  SimpleSubset(std::initializer_list<int> members)
  {
    for (int m : members)
      insert(m);
  }
  explicit SimpleSubset(std::span<const int> members)
  {
    for (int m : members)
      insert(m);
  }

  static SimpleSubset all(int rank)
  {
    SimpleSubset s;
    s.mask_ = rank >= 32 ? ~0u : ((1u << rank) - 1u);
    return s;
  }
  static SimpleSubset from_mask(std::uint32_t mask)
  {
    SimpleSubset s;
    s.mask_ = mask;
    return s;
  }

  void insert(int i) { mask_ |= (1u << i); }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  std::uint32_t mask() const { return mask_; }

  bool is_subset_of(const SimpleSubset& o) const { return (mask_ & ~o.mask_) == 0; }
  SimpleSubset complement(int rank) const { return from_mask(all(rank).mask_ & ~mask_); }

  std::vector<int> members() const
  {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i))
        out.push_back(i);
    return out;
  }

  /// Support test: every nonzero coefficient lies in the subset.
  bool supports(const RootVector& v) const
  {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0 && !contains(static_cast<int>(i)))
        return false;
    return true;
  }

  bool operator==(const SimpleSubset&) const = default;

private:
  std::uint32_t mask_ = 0;
};

struct WeightClassification
{
  bool dominant_integral = false;
  bool singular = false;
  bool integral = false;
};

/// A closed subsystem ZS ∩ Φ together with its base and Cartan determinant.
struct Subsystem
{
  std::vector<int> members;      // root indices
  std::vector<int> simple_roots; // root indices of the base
  long determinant = 1;
};

namespace detail
{

/// Integer lattice in Z^n kept in echelon form for membership tests.
class IntLattice
{
public:
  explicit IntLattice(std::size_t dim) : dim_(dim) {}

  void insert(std::vector<long> v)
  {
    for (std::size_t c = 0; c < dim_; ++c)
    {
      if (v[c] == 0)
        continue;
      auto it = pivot_row_.find(c);
      if (it == pivot_row_.end())
      {
        if (v[c] < 0)
          for (auto& x : v)
            x = -x;
        pivot_row_[c] = rows_.size();
        rows_.push_back(std::move(v));
        return;
      }
      auto& r = rows_[it->second];
      auto [g, x, y] = ext_gcd(r[c], v[c]);
      long rc = r[c] / g, vc = v[c] / g;
      std::vector<long> nr(dim_), nv(dim_);
      for (std::size_t j = 0; j < dim_; ++j)
      {
        nr[j] = x * r[j] + y * v[j];
        nv[j] = rc * v[j] - vc * r[j];
      }
      if (nr[c] < 0)
        for (auto& t : nr)
          t = -t;
      r = std::move(nr);
      v = std::move(nv);
    }
  }

  bool contains(std::vector<long> v) const
  {
    for (std::size_t c = 0; c < dim_; ++c)
    {
      if (v[c] == 0)
        continue;
      auto it = pivot_row_.find(c);
      if (it == pivot_row_.end())
        return false;
      const auto& r = rows_[it->second];
      if (v[c] % r[c] != 0)
        return false;
      long q = v[c] / r[c];
      for (std::size_t j = c; j < dim_; ++j)
        v[j] -= q * r[j];
    }
    return true;
  }

private:
  struct Egcd
  {
    long g, x, y;
  };
  static Egcd ext_gcd(long a, long b)
  {
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0)
    {
      long q = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0)
      return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
  }

  std::size_t dim_;
  std::vector<std::vector<long>> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

inline std::vector<std::vector<int>> cartan_matrix(char type, int rank)
{
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type)
  {
  case 'A':
    for (int i = 0; i + 1 < rank; ++i)
      link(i, i + 1);
    break;
  case 'B':
    for (int i = 0; i + 1 < rank; ++i)
      link(i, i + 1);
    a[rank - 2][rank - 1] = -2;
    break;
  case 'C':
    for (int i = 0; i + 1 < rank; ++i)
      link(i, i + 1);
    a[rank - 1][rank - 2] = -2;
    break;
  case 'D':
    for (int i = 0; i + 2 < rank; ++i)
      link(i, i + 1);
    link(rank - 3, rank - 1);
    break;
  case 'F':
    link(0, 1);
    link(1, 2);
    link(2, 3);
    a[1][2] = -2;
    break;
  case 'G':
    a[0][1] = -1;
    a[1][0] = -3;
    break;
  default:
    break;
  }
  return a;
}

} // namespace detail

/// Largest rank accepted by RootSystem::build.
inline constexpr int kMaxRank = 4;

/// Finite reduced root system of one split type, with Φ⁺ generated from the
/// Cartan matrix. Cartan entries are a[i][j] = ⟨α_i, α_j^∨⟩ = α_i(h_{α_j}).
class RootSystem
{
public:
  static RootSystem build(char type, int rank)
  {
    bool ok = false;
    switch (type)
    {
    case 'A': ok = rank >= 1 && rank <= kMaxRank; break;
    case 'B': ok = rank >= 2 && rank <= kMaxRank; break;
    case 'C': ok = rank >= 2 && rank <= kMaxRank; break;
    case 'D': ok = rank >= 4 && rank <= kMaxRank; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
    }
    if (!ok)
      throw PreconditionError("unsupported root system type " + std::string(1, type) + std::to_string(rank));
    return RootSystem(type, rank, detail::cartan_matrix(type, rank));
  }

  /// Parses a label such as "A2" or "G2".
  static RootSystem from_label(std::string_view label)
  {
    if (label.size() < 2 || label[0] < 'A' || label[0] > 'Z')
      throw ParseError("malformed root system label '" + std::string(label) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i)
    {
      if (label[i] < '0' || label[i] > '9')
        throw ParseError("malformed root system label '" + std::string(label) + "'");
      rank = rank * 10 + (label[i] - '0');
      if (rank > 100)
        throw ParseError("rank too large in '" + std::string(label) + "'");
    }
    return build(label[0], rank);
  }

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  std::size_t num_positive() const { return positive_.size(); }
  const std::vector<RootVector>& positive_roots() const { return positive_; }

  /// Roots are indexed 0..2N-1: first Φ⁺ in base order, then their negatives.
  std::size_t num_roots() const { return 2 * positive_.size(); }
  const RootVector& root(int k) const { return roots_[k]; }
  int negative(int k) const
  {
    int n = static_cast<int>(positive_.size());
    return k < n ? k + n : k - n;
  }
  bool is_positive(int k) const { return k < static_cast<int>(positive_.size()); }
  int simple_root_index(int i) const { return simple_index_[i]; }

  std::optional<int> root_index(const RootVector& v) const
  {
    auto it = index_.find(v);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }
  bool is_root(const RootVector& v) const { return index_.contains(v); }

  int require_root(const RootVector& v) const
  {
    auto k = root_index(v);
    if (!k)
      throw PreconditionError("vector is not a root");
    return *k;
  }

  /// ⟨β, α^∨⟩ for root indices β, α.
  int pairing(int beta, int alpha) const { return pairing_[beta * num_roots() + alpha]; }

  /// Coefficients of α^∨ in the simple coroots.
  const RootVector& coroot(int k) const { return coroots_[k]; }

  /// (β, β)/2, scaled so that the shortest simple roots of each component have value 1.
  long half_norm(int k) const { return half_norm_[k]; }

  /// ⟨λ, α^∨⟩ for a root index α; for simple α this is λ(h_α).
  Rational pairing(const Weight& lambda, int alpha) const
  {
    Rational s = 0;
    const auto& c = coroots_[alpha];
    for (int i = 0; i < rank_; ++i)
      if (c[i] != 0)
        s += c[i] * lambda[i];
    return s;
  }

  Rational pairing(const Weight& lambda, const RootVector& alpha) const
  {
    return pairing(lambda, require_root(alpha));
  }

  /// The root-lattice element v viewed as a weight: coordinates v(h_{α_j}).
  Weight to_weight(const RootVector& v) const
  {
    Weight w(rank_);
    for (int j = 0; j < rank_; ++j)
    {
      long s = 0;
      for (int i = 0; i < rank_; ++i)
        s += static_cast<long>(v[i]) * cartan_[i][j];
      w[j] = s;
    }
    return w;
  }

  Weight zero_weight() const { return Weight(rank_); }

  Weight fundamental(int i) const
  {
    Weight w(rank_);
    w[i] = 1;
    return w;
  }

  /// ρ = sum of fundamental weights.
  Weight rho() const
  {
    Weight w(rank_);
    for (auto& c : w.coords)
      c = 1;
    return w;
  }

  Weight parse_weight(std::string_view text) const
  {
    Weight w(parse_rational_list(text));
    if (static_cast<int>(w.rank()) != rank_)
      throw ParseError("weight '" + std::string(text) + "' has " + std::to_string(w.rank()) +
                       " coordinates, expected " + std::to_string(rank_));
    return w;
  }

  /// s_i · λ = λ − ⟨λ+ρ, α_i^∨⟩ α_i.
  Weight dot_reflect(int i, const Weight& lambda) const
  {
    check_simple(i);
    Rational shift = lambda[i] + 1;
    Weight out = lambda;
    for (int j = 0; j < rank_; ++j)
      out[j] -= shift * cartan_[i][j];
    return out;
  }

  /// {w · λ : w ∈ W}, sorted.
  std::vector<Weight> dot_orbit(const Weight& lambda) const
  {
    std::set<Weight> seen{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty())
    {
      Weight cur = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < rank_; ++i)
      {
        Weight next = dot_reflect(i, cur);
        if (seen.insert(next).second)
          queue.push_back(std::move(next));
      }
    }
    return {seen.begin(), seen.end()};
  }

  WeightClassification classify_weight(const Weight& lambda) const
  {
    WeightClassification c;
    c.integral = std::all_of(lambda.coords.begin(), lambda.coords.end(), is_integer);
    c.dominant_integral = std::all_of(lambda.coords.begin(), lambda.coords.end(), is_natural0);
    Weight shifted = lambda + rho();
    for (std::size_t k = 0; k < positive_.size(); ++k)
      if (pairing(shifted, static_cast<int>(k)) == 0)
        c.singular = true;
    return c;
  }

  bool is_dominant_integral(const Weight& lambda) const { return classify_weight(lambda).dominant_integral; }

  /// Φ_I = ZI ∩ Φ as root indices (positive roots first).
  std::vector<int> root_subsystem(const SimpleSubset& I) const
  {
    std::vector<int> out;
    for (std::size_t k = 0; k < roots_.size(); ++k)
      if (I.supports(roots_[k]))
        out.push_back(static_cast<int>(k));
    return out;
  }

  std::vector<int> positive_subsystem(const SimpleSubset& I) const
  {
    std::vector<int> out;
    for (std::size_t k = 0; k < positive_.size(); ++k)
      if (I.supports(roots_[k]))
        out.push_back(static_cast<int>(k));
    return out;
  }

  /// I° = {β ∈ I : α(h_β) = 0 for all α ∈ Δ∖I}.
  SimpleSubset interior(const SimpleSubset& I) const
  {
    SimpleSubset out;
    for (int b : I.members())
    {
      bool inner = true;
      for (int a = 0; a < rank_; ++a)
        if (!I.contains(a) && cartan_[a][b] != 0)
          inner = false;
      if (inner)
        out.insert(b);
    }
    return out;
  }

  /// True iff every connected component of the Dynkin diagram meets Δ∖I.
  bool is_totally_proper(const SimpleSubset& I) const
  {
    for (const auto& comp : components())
      if (comp.is_subset_of(I))
        return false;
    return true;
  }

  std::vector<SimpleSubset> components() const
  {
    std::vector<SimpleSubset> out;
    std::vector<bool> seen(rank_, false);
    for (int s = 0; s < rank_; ++s)
    {
      if (seen[s])
        continue;
      SimpleSubset comp;
      std::vector<int> stack{s};
      seen[s] = true;
      while (!stack.empty())
      {
        int v = stack.back();
        stack.pop_back();
        comp.insert(v);
        for (int u = 0; u < rank_; ++u)
          if (!seen[u] && cartan_[v][u] != 0)
          {
            seen[u] = true;
            stack.push_back(u);
          }
      }
      out.push_back(comp);
    }
    return out;
  }

  /// All nonempty closed subsystems ZS ∩ Φ (S ⊆ Φ), found by extending
  /// subsystems one root at a time. `root_order` permutes the root indices
  /// tried at each extension; the result is sorted and order-independent.
  std::vector<Subsystem> closed_subsystems(std::span<const int> root_order = {}) const
  {
    std::vector<int> order(root_order.begin(), root_order.end());
    if (order.empty())
    {
      order.resize(num_roots());
      std::iota(order.begin(), order.end(), 0);
    }
    using Mask = std::vector<bool>;
    std::set<Mask> found;
    std::deque<Mask> queue;
    Mask empty(num_roots(), false);
    found.insert(empty);
    queue.push_back(empty);
    while (!queue.empty())
    {
      Mask cur = std::move(queue.front());
      queue.pop_front();
      for (int g : order)
      {
        if (cur[g])
          continue;
        detail::IntLattice lattice(rank_);
        for (std::size_t k = 0; k < cur.size(); ++k)
          if (cur[k])
            lattice.insert(to_long(roots_[k]));
        lattice.insert(to_long(roots_[g]));
        Mask next(num_roots(), false);
        for (std::size_t k = 0; k < roots_.size(); ++k)
          next[k] = lattice.contains(to_long(roots_[k]));
        if (found.insert(next).second)
          queue.push_back(std::move(next));
      }
    }
    std::vector<Subsystem> out;
    for (const auto& mask : found)
    {
      Subsystem sub;
      for (std::size_t k = 0; k < mask.size(); ++k)
        if (mask[k])
          sub.members.push_back(static_cast<int>(k));
      if (sub.members.empty())
        continue;
      sub.simple_roots = base_of(sub.members);
      std::size_t r = sub.simple_roots.size();
      Matrix c(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          c(i, j) = pairing(sub.simple_roots[i], sub.simple_roots[j]);
      sub.determinant = c.determinant().get_num().get_si();
      out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const Subsystem& a, const Subsystem& b) {
      if (a.members.size() != b.members.size())
        return a.members.size() < b.members.size();
      return a.members < b.members;
    });
    return out;
  }

  /// Primes dividing the Cartan determinant of some closed subsystem.
  std::set<long> bad_primes(std::span<const int> root_order = {}) const
  {
    std::set<long> primes;
    for (const auto& sub : closed_subsystems(root_order))
    {
      long d = std::labs(sub.determinant);
      for (long q = 2; q <= d; ++q)
        if (d % q == 0)
        {
          primes.insert(q);
          while (d % q == 0)
            d /= q;
        }
    }
    return primes;
  }

  /// Row β holds the coordinates of h^β in the basis {h_α}: α(h^β) = δ_{αβ}.
  Matrix dual_h_basis() const { return Matrix::from_integers(cartan_).transpose().inverse(); }

  /// λ(h^β) for every simple β.
  std::vector<Rational> dual_values(const Weight& lambda) const
  {
    Matrix m = dual_h_basis();
    std::vector<Rational> out(rank_);
    for (int b = 0; b < rank_; ++b)
      for (int a = 0; a < rank_; ++a)
        out[b] += m(b, a) * lambda[a];
    return out;
  }

  void check_simple(int i) const
  {
    if (i < 0 || i >= rank_)
      throw PreconditionError("simple root index out of range");
  }

private:
  RootSystem(char type, int rank, std::vector<std::vector<int>> cartan)
      : type_(type), rank_(rank), cartan_(std::move(cartan))
  {
    compute_symmetrizer();
    generate_positive_roots();
    index_roots();
  }

  static std::vector<long> to_long(const RootVector& v) { return {v.begin(), v.end()}; }

  void compute_symmetrizer()
  {
    std::vector<Rational> d(rank_, 0);
    for (const auto& comp : components())
    {
      auto m = comp.members();
      d[m.front()] = 1;
      std::vector<int> stack{m.front()};
      while (!stack.empty())
      {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < rank_; ++j)
          if (j != i && cartan_[i][j] != 0 && d[j] == 0)
          {
            // a_ij d_j = a_ji d_i
            d[j] = Rational(cartan_[j][i]) * d[i] / cartan_[i][j];
            stack.push_back(j);
          }
      }
    }
    Integer l = 1;
    for (const auto& x : d)
      l = lcm(l, Integer(x.get_den()));
    Integer g = 0;
    for (const auto& x : d)
      g = gcd(g, Integer(x.get_num() * (l / x.get_den())));
    simple_half_norm_.resize(rank_);
    for (int i = 0; i < rank_; ++i)
      simple_half_norm_[i] = Rational(d[i] * l / g).get_num().get_si();
  }

  long inner(const RootVector& a, const RootVector& b) const
  {
    long s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        s += static_cast<long>(a[i]) * b[j] * cartan_[i][j] * simple_half_norm_[j];
    return s;
  }

  void generate_positive_roots()
  {
    std::set<RootVector> known;
    std::vector<RootVector> layer;
    for (int i = 0; i < rank_; ++i)
    {
      RootVector v(rank_, 0);
      v[i] = 1;
      layer.push_back(v);
      known.insert(v);
    }
    std::vector<RootVector> all = layer;
    while (!layer.empty())
    {
      std::vector<RootVector> next;
      for (const auto& beta : layer)
        for (int i = 0; i < rank_; ++i)
        {
          // α_i-string through β: p steps down, q = p − ⟨β, α_i^∨⟩ steps up.
          int p = 0;
          RootVector down = beta;
          while (true)
          {
            down[i] -= 1;
            if (!known.contains(down))
              break;
            ++p;
          }
          long pair = 0;
          for (int j = 0; j < rank_; ++j)
            pair += static_cast<long>(beta[j]) * cartan_[j][i];
          if (p - pair > 0)
          {
            RootVector up = beta;
            up[i] += 1;
            if (known.insert(up).second)
              next.push_back(up);
          }
        }
      all.insert(all.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const RootVector& a, const RootVector& b) {
      int ha = lierep::height(a), hb = lierep::height(b);
      if (ha != hb)
        return ha < hb;
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    positive_ = std::move(all);
  }

  void index_roots()
  {
    const int n = static_cast<int>(positive_.size());
    roots_ = positive_;
    for (const auto& r : positive_)
      roots_.push_back(-r);
    for (int k = 0; k < 2 * n; ++k)
      index_[roots_[k]] = k;
    simple_index_.resize(rank_);
    for (int i = 0; i < rank_; ++i)
    {
      RootVector v(rank_, 0);
      v[i] = 1;
      simple_index_[i] = index_.at(v);
    }
    half_norm_.resize(2 * n);
    coroots_.resize(2 * n);
    for (int k = 0; k < 2 * n; ++k)
    {
      half_norm_[k] = inner(roots_[k], roots_[k]) / 2;
      RootVector c(rank_);
      for (int i = 0; i < rank_; ++i)
        c[i] = static_cast<int>(roots_[k][i] * simple_half_norm_[i] / half_norm_[k]);
      coroots_[k] = c;
    }
    pairing_.assign(4 * n * n, 0);
    for (int b = 0; b < 2 * n; ++b)
      for (int a = 0; a < 2 * n; ++a)
        pairing_[b * 2 * n + a] = static_cast<int>(2 * inner(roots_[b], roots_[a]) / (2 * half_norm_[a]));
  }

  std::vector<int> base_of(const std::vector<int>& members) const
  {
    std::vector<int> pos;
    for (int k : members)
      if (is_positive(k))
        pos.push_back(k);
    std::set<RootVector> sums;
    for (int a : pos)
      for (int b : pos)
        sums.insert(roots_[a] + roots_[b]);
    std::vector<int> base;
    for (int k : pos)
      if (!sums.contains(roots_[k]))
        base.push_back(k);
    return base;
  }

  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<long> simple_half_norm_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> roots_;
  std::map<RootVector, int> index_;
  std::vector<int> simple_index_;
  std::vector<long> half_norm_;
  std::vector<RootVector> coroots_;
  std::vector<int> pairing_;
};

} // namespace lierep

#endif // LIEREP_ROOT_SYSTEM_HPP
