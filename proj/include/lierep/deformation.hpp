#ifndef LIEREP_DEFORMATION_HPP
#define LIEREP_DEFORMATION_HPP

#include "lierep/enveloping.hpp"
#include "lierep/modules.hpp"
#include "lierep/polynomial.hpp"
#include "lierep/root_system.hpp"

#include <memory>
#include <set>
#include <vector>

namespace lierep
{

struct AdmissibilityReport
{
  Weight weight;
  long n = 0;
  long p = 0;
  /// v_p(λ(h_α)) per simple root; kInfiniteValuation for zero.
  std::vector<long> valuations;
  bool admissible = false;
};

/// λ(p^n h_R) ⊆ R, i.e. v_p(λ(h_α)) ≥ −n on the R-basis {h_α}.
inline AdmissibilityReport weight_admissible(const Weight& lambda, long p, long n)
{
  if (p == 2 || !is_prime(p))
    throw PreconditionError("admissibility needs an odd prime");
  if (n < 0)
    throw PreconditionError("deformation parameter must be non-negative");
  AdmissibilityReport r{lambda, n, p, {}, true};
  for (const auto& c : lambda.coords)
  {
    long v = valuation(c, static_cast<unsigned long>(p));
    r.valuations.push_back(v);
    if (v < -n)
      r.admissible = false;
  }
  return r;
}

/// v_p(c) ≥ −n, i.e. c ∈ p^{−n}R.
inline bool scalar_admissible(const Rational& c, long p, long n)
{
  return valuation(c, static_cast<unsigned long>(p)) >= -n;
}

/// Level of a module vector in the lattice spanned by p^{n(|s|+|t|)} f^s T^t v:
/// min over terms of v_p(coefficient) − n(|s| + |t|).
inline long module_gamma_level(const ModuleVector& v, const DeformationContext& ctx)
{
  long level = kInfiniteValuation;
  for (const auto& [label, c] : v)
  {
    long deg = degree(label.f);
    for (int x : label.t)
      deg += x;
    level = std::min(level, valuation(c, static_cast<unsigned long>(ctx.p)) - ctx.n * deg);
  }
  return level;
}

/// The projection φ_c : M_{I°,h'}(λ) → M_{I°}(λ − Σ c_i α_i) of l_I-modules,
/// f^s (h^{α_i})^t v ↦ Π (λ(h^{α_i}) − c_i)^{t_i} f^s v, with c indexed by
/// Δ∖I in increasing order.
class PhiMap
{
public:
  PhiMap(std::shared_ptr<const Enveloping> U, const SimpleSubset& I, const Weight& lambda, std::vector<Rational> c,
         const DeformationContext& ctx)
      : source_(levi_gvm(U, I, lambda, ctx.depth)),
        target_(levi_module(U, I, U->roots().interior(I), shifted_weight(U->roots(), I, lambda, c), ctx.depth)),
        c_(std::move(c)), ctx_(ctx)
  {
    ctx.validate();
    if (!weight_admissible(lambda, ctx.p, ctx.n).admissible)
      throw PreconditionError("highest weight is not admissible");
    for (const auto& x : c_)
      if (!scalar_admissible(x, ctx.p, ctx.n))
        throw PreconditionError("shift c must lie in p^{-n}R");
    std::vector<Rational> dual = U->roots().dual_values(lambda);
    for (std::size_t k = 0; k < c_.size(); ++k)
      values_.push_back(dual[source_.central_roots()[k]] - c_[k]);
  }

  static Weight shifted_weight(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda,
                               const std::vector<Rational>& c)
  {
    auto outside = I.complement(rs.rank()).members();
    if (c.size() != outside.size())
      throw PreconditionError("shift vector must be indexed by the complement of I");
    Weight mu = lambda;
    for (std::size_t k = 0; k < outside.size(); ++k)
    {
      RootVector a(rs.rank(), 0);
      a[outside[k]] = 1;
      mu -= c[k] * rs.to_weight(a);
    }
    return mu;
  }

  const HighestWeightModule& source() const { return source_; }
  const HighestWeightModule& target() const { return target_; }
  const std::vector<Rational>& shift() const { return c_; }
  const DeformationContext& context() const { return ctx_; }

  /// λ(h^{α_i}) − c_i, the values substituted for the central variables.
  const std::vector<Rational>& substitution() const { return values_; }

  ModuleVector apply(const ModuleVector& m) const
  {
    ModuleVector out;
    for (const auto& [label, coeff] : m)
    {
      Rational s = coeff;
      for (std::size_t k = 0; k < label.t.size(); ++k)
        s *= rational_power(values_[k], static_cast<unsigned long>(label.t[k]));
      add_term(out, ModuleLabel{label.f, {}}, s);
    }
    return target_.reduce(out);
  }

private:
  HighestWeightModule source_;
  HighestWeightModule target_;
  std::vector<Rational> c_;
  DeformationContext ctx_;
  std::vector<Rational> values_;
};

inline int label_depth(const ModuleLabel& label, const Enveloping& U)
{
  int d = 0;
  for (int l = 0; l < U.num_letters(); ++l)
    if (U.kind(l) == Enveloping::LetterKind::f)
      d += label.f[l] * height(U.roots().root(U.letter_index(l)));
  for (int x : label.t)
    d += x;
  return d;
}

/// φ_c(x·m) = x·φ_c(m), both sides computed independently.
inline bool phi_c_homomorphism_check(const PhiMap& phi, const Element& x, const ModuleVector& m)
{
  const auto& U = phi.source().algebra();
  int deg = std::max(x.degree(), 0);
  for (const auto& [label, c] : m)
    if (label_depth(label, U) + deg > phi.source().depth())
      throw PreconditionError("depth exhausted");
  ModuleVector lhs = phi.apply(phi.source().act(x, m));
  ModuleVector rhs = phi.target().act(x, phi.apply(m));
  return lhs == rhs;
}

/// For every depth vector ν with |ν| ≤ depth the images of the source basis
/// span the target space.
inline bool phi_c_surjective(const PhiMap& phi, int depth)
{
  const auto& src = phi.source();
  const auto& tgt = phi.target();
  for (const auto& nu : depth_vectors(src.roots().rank(), src.config().levi, depth))
  {
    auto target_basis = tgt.reduced_monomials(nu);
    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < target_basis.size(); ++j)
      index[target_basis[j]] = j;
    std::vector<ModuleVector> images;
    for (const auto& label : src.basis(nu))
    {
      int tdeg = 0;
      for (int x : label.t)
        tdeg += x;
      if (height(nu) + tdeg > depth)
        continue;
      ModuleVector m;
      m[label] = 1;
      images.push_back(phi.apply(m));
    }
    Matrix mat(images.size(), target_basis.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      for (const auto& [label, c] : images[i])
        mat(i, index.at(label.f)) = c;
    if (mat.rank() != target_basis.size())
      return false;
  }
  return true;
}

/// (λ(h^{α_i}) − h^{α_i})·v_c = c_i v_c on the highest-weight vector of
/// M_{I°}(λ − Σ c_j α_j); `i` indexes Δ∖I.
inline bool hw_scalar_check(std::shared_ptr<const Enveloping> U, const SimpleSubset& I, const Weight& lambda,
                            const std::vector<Rational>& c, std::size_t i, const DeformationContext& ctx)
{
  PhiMap phi(U, I, lambda, c, ctx);
  if (i >= c.size())
    throw PreconditionError("index outside the complement of I");
  int alpha = I.complement(U->roots().rank()).members()[i];
  Rational value = U->roots().dual_values(lambda)[alpha];
  Element op = U->scalar(value) - U->dual_h(alpha);
  ModuleVector v = phi.target().generator();
  ModuleVector lhs = phi.target().act(op, v);
  ModuleVector rhs;
  add_term(rhs, phi.target().generator_label(), c[i]);
  return lhs == rhs;
}

/// True iff `q` vanishes on the tensor grid. The grid must give each variable
/// at least degree_bound + 1 distinct points and q must have total degree at
/// most degree_bound; then vanishing on the grid means q = 0.
inline bool vanishing_test(const Polynomial& q, int degree_bound, const std::vector<std::vector<Rational>>& grid)
{
  if (q.total_degree() > degree_bound)
    throw PreconditionError("polynomial degree exceeds the stated bound");
  if (grid.size() != q.num_vars())
    throw PreconditionError("grid must list sample points for every variable");
  for (const auto& axis : grid)
  {
    std::set<Rational> distinct(axis.begin(), axis.end());
    if (static_cast<int>(distinct.size()) < degree_bound + 1)
      throw PreconditionError("grid has too few distinct points for the degree bound");
  }
  std::vector<Rational> point(grid.size());
  bool zero = true;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (!zero)
      return;
    if (i == grid.size())
    {
      if (q.evaluate(point) != 0)
        zero = false;
      return;
    }
    for (const auto& x : grid[i])
    {
      point[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return zero;
}

/// Lagrange interpolation through (x_k, y_k) in one variable.
inline Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
  if (xs.size() != ys.size())
    throw PreconditionError("interpolation needs matching point and value lists");
  Polynomial out(1);
  for (std::size_t k = 0; k < xs.size(); ++k)
  {
    Polynomial basis = Polynomial::constant(1, 1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j)
    {
      if (j == k)
        continue;
      basis = basis * (Polynomial::variable(1, 0) - Polynomial::constant(1, xs[j]));
      denom *= xs[k] - xs[j];
    }
    out += basis * (ys[k] / denom);
  }
  return out;
}

} // namespace lierep

#endif // LIEREP_DEFORMATION_HPP
