#ifndef LIEREP_REFLECTION_HPP
#define LIEREP_REFLECTION_HPP

#include "lierep/deformation.hpp"
#include "lierep/enveloping.hpp"
#include "lierep/modules.hpp"

#include <memory>

namespace lierep
{

namespace detail
{

inline ModuleVector divided_f_vector(const HighestWeightModule& M, int alpha, int s)
{
  if (s < 0)
    return {};
  const auto& U = M.algebra();
  int letter = U.f_letter(M.roots().simple_root_index(alpha));
  return M.act(U.divided_power(letter, s), M.generator());
}

inline int reflection_depth(const Enveloping& U, int alpha, int s, int depth)
{
  U.roots().check_simple(alpha);
  if (s < 0)
    throw PreconditionError("exponent s must be non-negative");
  if (depth < 0)
    depth = std::max(s, 1);
  if (s > depth)
    throw PreconditionError("depth exhausted");
  return depth;
}

} // namespace detail

/// e_α · f_α^{[s]} v = (a + 1 − s) f_α^{[s−1]} v in the Verma module M(λ), a = λ(h_α).
/// A negative depth means "just deep enough".
inline bool reflection_formula_check(std::shared_ptr<const Enveloping> U, const Weight& lambda, int alpha, int s,
                                     int depth = -1)
{
  HighestWeightModule M = verma(U, lambda, detail::reflection_depth(*U, alpha, s, depth));
  ModuleVector lhs = M.act(U->e(U->roots().simple_root_index(alpha)), detail::divided_f_vector(M, alpha, s));
  ModuleVector rhs;
  for (const auto& [label, c] : detail::divided_f_vector(M, alpha, s - 1))
    add_term(rhs, label, (lambda[alpha] + 1 - s) * c);
  return lhs == rhs;
}

/// The identity as a polynomial statement in a = λ(h_α): every coefficient of
/// e_α f_α^{[s]} v − (a + 1 − s) f_α^{[s−1]} v is affine in a, so it is
/// interpolated from samples and passed to the vanishing test. The other
/// coordinates of λ are taken from `base`.
inline bool reflection_formula_symbolic(std::shared_ptr<const Enveloping> U, const Weight& base, int alpha, int s)
{
  const int depth = detail::reflection_depth(*U, alpha, s, -1);
  const int bound = 1;
  std::vector<Rational> xs;
  for (int k = 0; k <= bound + 1; ++k)
    xs.push_back(ratio(2 * k + 1, 3));
  std::map<ModuleLabel, std::vector<Rational>> samples;
  for (std::size_t k = 0; k < xs.size(); ++k)
  {
    Weight lambda = base;
    lambda.coords[alpha] = xs[k];
    HighestWeightModule M = verma(U, lambda, depth);
    ModuleVector diff = M.act(U->e(U->roots().simple_root_index(alpha)), detail::divided_f_vector(M, alpha, s));
    for (const auto& [label, c] : detail::divided_f_vector(M, alpha, s - 1))
      add_term(diff, label, -(xs[k] + 1 - s) * c);
    for (const auto& [label, c] : diff)
    {
      auto& ys = samples[label];
      ys.resize(xs.size());
      ys[k] = c;
    }
  }
  for (const auto& [label, ys] : samples)
  {
    std::vector<Rational> head(xs.begin(), xs.begin() + bound + 1);
    std::vector<Rational> vals(ys.begin(), ys.begin() + bound + 1);
    Polynomial q = interpolate(head, vals);
    if (q.evaluate(std::span<const Rational>(&xs.back(), 1)) != ys.back())
      return false;
    if (!vanishing_test(q, bound, {xs}))
      return false;
  }
  return true;
}

struct NonvanishingResult
{
  /// c with e_α^s f_α^{[s]} v = c v.
  Rational coefficient;
  /// a(a − 1)⋯(a − s + 1).
  Rational product;
  bool nonzero = false;
};

/// e_α^s f_α^{[s]} v in M(λ); nonzero whenever λ(h_α) ∉ {0, 1, 2, …}.
inline NonvanishingResult nonvanishing_check(std::shared_ptr<const Enveloping> U, const Weight& lambda, int alpha,
                                             int s, int depth = -1)
{
  HighestWeightModule M = verma(U, lambda, detail::reflection_depth(*U, alpha, s, depth));
  ModuleVector w = detail::divided_f_vector(M, alpha, s);
  Element e = U->e(U->roots().simple_root_index(alpha));
  for (int k = 0; k < s; ++k)
    w = M.act(e, w);
  NonvanishingResult r;
  for (const auto& [label, c] : w)
  {
    if (!(label == M.generator_label()))
      throw std::logic_error("e^s f^[s] v left the highest weight space");
    r.coefficient = c;
  }
  r.product = 1;
  for (int j = 0; j < s; ++j)
    r.product *= lambda[alpha] - j;
  r.nonzero = r.coefficient != 0;
  return r;
}

} // namespace lierep

#endif // LIEREP_REFLECTION_HPP
