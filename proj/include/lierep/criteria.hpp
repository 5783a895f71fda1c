#ifndef LIEREP_CRITERIA_HPP
#define LIEREP_CRITERIA_HPP

#include "lierep/deformation.hpp"
#include "lierep/enveloping.hpp"
#include "lierep/modules.hpp"
#include "lierep/root_system.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lierep
{

namespace detail
{

inline void require_dominant_on(const Weight& lambda, const SimpleSubset& I)
{
  for (int a : I.members())
    if (!is_natural0(lambda[a]))
      throw PreconditionError("weight must take values in N0 on the simple roots of I");
}

} // namespace detail

/// Ψ_λ⁺ = {β ∈ Φ_J⁺ ∖ Φ_I⁺ : ⟨λ+ρ, β^∨⟩ ∈ {1, 2, …}} as root indices; J = Δ by default.
inline std::vector<int> psi_plus(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda,
                                 std::optional<SimpleSubset> J = std::nullopt)
{
  SimpleSubset universe = J.value_or(SimpleSubset::all(rs.rank()));
  Weight shifted = lambda + rs.rho();
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
  {
    const auto& r = rs.root(k);
    if (!universe.supports(r) || I.supports(r))
      continue;
    if (is_natural(rs.pairing(shifted, k)))
      out.push_back(k);
  }
  return out;
}

/// γ ∈ Φ_β = (QΦ_I + Qβ) ∩ Φ, tested by rank.
inline bool in_phi_beta(const RootSystem& rs, const SimpleSubset& I, int beta, int gamma)
{
  const int r = rs.rank();
  auto members = I.members();
  Matrix base(members.size() + 1, r);
  for (std::size_t i = 0; i < members.size(); ++i)
    base(i, members[i]) = 1;
  for (int j = 0; j < r; ++j)
    base(members.size(), j) = rs.root(beta)[j];
  Matrix ext(members.size() + 2, r);
  for (std::size_t i = 0; i <= members.size(); ++i)
    for (int j = 0; j < r; ++j)
      ext(i, j) = base(i, j);
  for (int j = 0; j < r; ++j)
    ext(members.size() + 1, j) = rs.root(gamma)[j];
  return base.rank() == ext.rank();
}

/// s_β γ = γ − ⟨γ, β^∨⟩ β.
inline RootVector reflect_root(const RootSystem& rs, int beta, int gamma)
{
  RootVector out = rs.root(gamma);
  int c = rs.pairing(gamma, beta);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= c * rs.root(beta)[i];
  return out;
}

/// Whether γ witnesses condition (*) for β.
inline bool is_star_witness(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda, int beta, int gamma,
                            const SimpleSubset& universe)
{
  if (!universe.supports(rs.root(gamma)) || !in_phi_beta(rs, I, beta, gamma))
    return false;
  if (rs.pairing(lambda + rs.rho(), gamma) != 0)
    return false;
  RootVector image = reflect_root(rs, beta, gamma);
  return rs.is_root(image) && I.supports(image);
}

struct StarResult
{
  bool holds = false;
  std::vector<int> psi;
  /// β ↦ γ for every β ∈ Ψ_λ⁺ that has a witness.
  std::map<int, int> witnesses;
  std::vector<int> unwitnessed;
};

/// Condition (*): every β ∈ Ψ_λ⁺ has γ ∈ Φ_β with ⟨λ+ρ, γ^∨⟩ = 0 and s_β γ ∈ Φ_I.
/// Witnesses are searched over positive roots first. With J given, everything
/// is read inside the Levi root system Φ_J.
inline StarResult condition_star(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda,
                                 std::optional<SimpleSubset> J = std::nullopt)
{
  SimpleSubset universe = J.value_or(SimpleSubset::all(rs.rank()));
  if (!I.is_subset_of(universe))
    throw PreconditionError("I must lie in the Levi subset");
  detail::require_dominant_on(lambda, I);
  StarResult res;
  res.psi = psi_plus(rs, I, lambda, universe);
  for (int beta : res.psi)
  {
    bool found = false;
    for (int gamma = 0; gamma < static_cast<int>(rs.num_roots()) && !found; ++gamma)
      if (is_star_witness(rs, I, lambda, beta, gamma, universe))
      {
        res.witnesses[beta] = gamma;
        found = true;
      }
    if (!found)
      res.unwitnessed.push_back(beta);
  }
  res.holds = res.unwitnessed.empty();
  return res;
}

/// Condition (**): Ψ_λ⁺ = ∅.
inline bool condition_star_star(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda,
                                std::optional<SimpleSubset> J = std::nullopt)
{
  detail::require_dominant_on(lambda, I);
  return psi_plus(rs, I, lambda, J).empty();
}

enum class Irreducibility
{
  irreducible,
  unknown
};

/// Jantzen's sufficient criterion: irreducible when (*) holds, otherwise no claim.
inline Irreducibility jantzen_irreducible(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda)
{
  return condition_star(rs, I, lambda).holds ? Irreducibility::irreducible : Irreducibility::unknown;
}

/// Least A ∈ {1, 2, …} with ⟨λ+ρ, α^∨⟩ − A ∉ {1, 2, …} for every listed root α.
inline long compute_A(const RootSystem& rs, std::span<const int> roots, const Weight& lambda)
{
  Weight shifted = lambda + rs.rho();
  long a = 1;
  for (int k : roots)
  {
    Rational q = rs.pairing(shifted, k);
    if (is_integer(q) && q > a)
      a = q.get_num().get_si();
  }
  return a;
}

/// For c_i ≤ −A (c indexed by Δ∖I), checks condition (*) for
/// (I°, λ − Σ c_i α_i) inside the Levi root system Φ_I.
inline bool gvm_region_irreducible(const RootSystem& rs, const SimpleSubset& I, const Weight& lambda,
                                   const std::vector<long>& c)
{
  detail::require_dominant_on(lambda, I);
  auto outside = I.complement(rs.rank()).members();
  if (c.size() != outside.size())
    throw PreconditionError("shift vector must be indexed by the complement of I");
  long A = compute_A(rs, rs.root_subsystem(I), lambda);
  for (long x : c)
    if (x > -A)
      throw PreconditionError("shift must satisfy c_i <= -A");
  std::vector<Rational> cq(c.begin(), c.end());
  Weight mu = PhiMap::shifted_weight(rs, I, lambda, cq);
  return condition_star(rs, rs.interior(I), mu, I).holds;
}

struct ReflectionStep
{
  int simple = 0;
  Rational pairing;
  Weight from;
  Weight to;
};

/// s_α·λ, licensed only when ⟨λ+ρ, α^∨⟩ ∉ {0, 1, 2, …}.
inline ReflectionStep reflection_step(const RootSystem& rs, const Weight& lambda, int alpha)
{
  rs.check_simple(alpha);
  Rational q = lambda[alpha] + 1;
  if (is_natural0(q))
    throw PreconditionError("reflection step needs <lambda+rho, alpha^> outside N0");
  return {alpha, q, lambda, rs.dot_reflect(alpha, lambda)};
}

inline bool reflection_step_valid(const RootSystem& rs, const ReflectionStep& s)
{
  return !is_natural0(s.from[s.simple] + 1) && s.pairing == s.from[s.simple] + 1 &&
         rs.dot_reflect(s.simple, s.from) == s.to;
}

/// Odd prime dividing no Cartan determinant of a closed subsystem.
inline bool good_prime(long p, const RootSystem& rs)
{
  if (p == 2)
    return false;
  if (!is_prime(p))
    throw PreconditionError("good_prime needs a prime");
  return !rs.bad_primes().contains(p);
}

enum class WeightCase
{
  dominant_integral_excluded,
  singular,
  regular_nonintegral,
  regular_integral
};

inline std::string to_string(WeightCase c)
{
  switch (c)
  {
  case WeightCase::dominant_integral_excluded: return "dominant_integral_excluded";
  case WeightCase::singular: return "singular";
  case WeightCase::regular_nonintegral: return "regular_nonintegral";
  case WeightCase::regular_integral: return "regular_integral";
  }
  return "";
}

struct Certificate
{
  enum class Kind
  {
    condition_star,
    condition_star_star,
    reflection_step,
    case3_extension
  };
  Kind kind = Kind::condition_star;
  /// Weight the certificate speaks about.
  Weight weight;
  /// I for (*) and (**); the parabolic subset of M_I(µ) for case3.
  SimpleSubset subset;
  /// (*) witnesses β ↦ γ.
  std::map<int, int> witnesses;
  std::optional<ReflectionStep> step;
  /// case3: dominant µ with weight = s_γ·µ.
  std::optional<Weight> mu;
  int reflected_by = -1;
  int check_depth = 0;
  bool verified = false;
};

inline std::string to_string(Certificate::Kind k)
{
  switch (k)
  {
  case Certificate::Kind::condition_star: return "condition_star";
  case Certificate::Kind::condition_star_star: return "condition_star_star";
  case Certificate::Kind::reflection_step: return "reflection_step";
  case Certificate::Kind::case3_extension: return "case3_extension";
  }
  return "";
}

struct CaseReport
{
  std::string type_label;
  Weight lambda;
  long p = 0;
  long n = 0;
  WeightCase kind = WeightCase::singular;
  std::vector<Certificate> certificates;
  std::vector<Weight> chain;
  std::map<std::string, bool> checks;
  std::string conclusion;

  bool all_checks_pass() const
  {
    for (const auto& [name, ok] : checks)
      if (!ok)
        return false;
    return true;
  }
};

/// character(M_{K}(µ)) = simple_dims(µ) + simple_dims(λ) on every weight of
/// µ − ν with |ν| ≤ depth.
inline bool case3_character_check(std::shared_ptr<const Enveloping> U, const Weight& mu, const Weight& lambda,
                                  const SimpleSubset& K, int depth)
{
  Character m = parabolic_verma(U, K, mu, depth).character();
  Character top = simple_dims(U, mu, depth);
  Character bottom = simple_dims(U, lambda, depth);
  for (const auto& [w, d] : m.by_weight)
    if (d != top.dim(w) + bottom.dim(w))
      return false;
  return true;
}

/// Re-runs the library operation behind a certificate.
inline bool verify_certificate(std::shared_ptr<const Enveloping> U, const Certificate& c)
{
  const auto& rs = U->roots();
  switch (c.kind)
  {
  case Certificate::Kind::condition_star:
  {
    StarResult r = condition_star(rs, c.subset, c.weight);
    if (!r.holds)
      return false;
    for (const auto& [beta, gamma] : c.witnesses)
      if (!is_star_witness(rs, c.subset, c.weight, beta, gamma, SimpleSubset::all(rs.rank())))
        return false;
    return c.witnesses.size() == r.psi.size();
  }
  case Certificate::Kind::condition_star_star: return condition_star_star(rs, c.subset, c.weight);
  case Certificate::Kind::reflection_step: return c.step && reflection_step_valid(rs, *c.step);
  case Certificate::Kind::case3_extension:
    return c.mu && rs.is_dominant_integral(*c.mu) && rs.dot_reflect(c.reflected_by, *c.mu) == c.weight &&
           case3_character_check(U, *c.mu, c.weight, c.subset, c.check_depth);
  }
  return false;
}

/// Follows the case analysis for sl3 faithfulness of L(λ): singular weights,
/// regular non-integral weights and regular integral weights, emitting the
/// certificate behind each step. `depth` is the truncation used by the
/// character check of the regular integral case.
inline CaseReport classify_sl3(std::shared_ptr<const Enveloping> U, const Weight& lambda, long p, long n,
                               int depth = 6)
{
  const auto& rs = U->roots();
  if (rs.label() != "A2")
    throw PreconditionError("classification is implemented for type A2 only");
  if (static_cast<int>(lambda.rank()) != 2)
    throw PreconditionError("weight must have two coordinates");
  if (!weight_admissible(lambda, p, n).admissible)
    throw PreconditionError("weight is not admissible for the given prime and deformation parameter");
  if (!good_prime(p, rs))
    throw PreconditionError("prime is not good for A2");
  if (rs.is_dominant_integral(lambda))
    throw PreconditionError("dominant integral weights are excluded");

  CaseReport rep;
  rep.type_label = rs.label();
  rep.lambda = lambda;
  rep.p = p;
  rep.n = n;
  auto cls = rs.classify_weight(lambda);
  rep.kind = cls.singular ? WeightCase::singular
                          : (cls.integral ? WeightCase::regular_integral : WeightCase::regular_nonintegral);
  rep.chain.push_back(lambda);

  auto step = [&](int alpha) {
    ReflectionStep s = reflection_step(rs, rep.chain.back(), alpha);
    Certificate c;
    c.kind = Certificate::Kind::reflection_step;
    c.weight = s.from;
    c.step = s;
    rep.certificates.push_back(c);
    rep.chain.push_back(s.to);
  };
  auto star = [&](const Weight& w, SimpleSubset I) {
    StarResult r = condition_star(rs, I, w);
    Certificate c;
    c.kind = Certificate::Kind::condition_star;
    c.weight = w;
    c.subset = I;
    c.witnesses = r.witnesses;
    rep.certificates.push_back(c);
    rep.conclusion = "L(mu) = M_I(mu) by condition (*) for mu = " + w.str();
  };
  auto star_star = [&](const Weight& w) {
    Certificate c;
    c.kind = Certificate::Kind::condition_star_star;
    c.weight = w;
    rep.certificates.push_back(c);
    rep.conclusion = "L(mu) = M(mu) by condition (**) for mu = " + w.str();
  };

  bool done = false;
  for (int iter = 0; iter < 8 && !done; ++iter)
  {
    const Weight cur = rep.chain.back();
    const Rational& a = cur[0];
    const Rational& b = cur[1];
    auto c = rs.classify_weight(cur);
    if (c.singular)
    {
      if (b == -1)
      {
        if (!is_natural0(a))
          star_star(cur);
        else
          star(cur, SimpleSubset{0});
        done = true;
      }
      else if (a == -1)
      {
        if (!is_natural0(b))
          star_star(cur);
        else
          star(cur, SimpleSubset{1});
        done = true;
      }
      else
        step(is_natural0(a) ? 1 : 0);
    }
    else if (!c.integral)
    {
      if (is_natural0(a))
      {
        star(cur, SimpleSubset{0});
        done = true;
      }
      else if (is_natural0(b))
      {
        star(cur, SimpleSubset{1});
        done = true;
      }
      else if (is_integer(a))
        step(0);
      else if (is_integer(b))
        step(1);
      else if (!is_natural(a + b + 2))
      {
        star_star(cur);
        done = true;
      }
      else
        step(0);
    }
    else
    {
      for (int g = 0; g < 2 && !done; ++g)
      {
        Weight mu = rs.dot_reflect(g, cur);
        if (rs.is_dominant_integral(mu))
        {
          Certificate cert;
          cert.kind = Certificate::Kind::case3_extension;
          cert.weight = cur;
          cert.subset = SimpleSubset{1 - g};
          cert.mu = mu;
          cert.reflected_by = g;
          cert.check_depth = depth;
          rep.certificates.push_back(cert);
          rep.chain.push_back(mu);
          rep.conclusion = "M_I(mu) has composition factors L(mu) and L(" + cur.str() + ") for mu = " + mu.str();
          done = true;
        }
      }
      if (!done)
        step(cur[0] + 1 < 0 ? 0 : 1);
    }
  }
  if (!done)
    throw std::logic_error("classification did not terminate");

  bool consecutive = true;
  for (std::size_t i = 1; i < rep.chain.size(); ++i)
  {
    bool linked = false;
    for (int g = 0; g < 2; ++g)
      if (rs.dot_reflect(g, rep.chain[i - 1]) == rep.chain[i])
        linked = true;
    consecutive = consecutive && linked;
  }
  bool certs = true;
  for (auto& cert : rep.certificates)
  {
    cert.verified = verify_certificate(U, cert);
    certs = certs && cert.verified;
  }
  rep.checks["admissible"] = true;
  rep.checks["good_prime"] = true;
  rep.checks["not_dominant_integral"] = true;
  rep.checks["chain_consecutive"] = consecutive;
  rep.checks["certificates_verified"] = certs;
  return rep;
}

} // namespace lierep

#endif // LIEREP_CRITERIA_HPP
