#ifndef LIEREP_JSON_HPP
#define LIEREP_JSON_HPP

#include "lierep/chevalley.hpp"
#include "lierep/criteria.hpp"
#include "lierep/deformation.hpp"
#include "lierep/enveloping.hpp"
#include "lierep/modules.hpp"
#include "lierep/root_system.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace lierep::json
{

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json document(Json body)
{
  Json out;
  out["schema"] = kSchemaVersion;
  for (auto& [k, v] : body.items())
    out[k] = std::move(v);
  return out;
}

inline Json rational(const Rational& q) { return to_string(q); }

inline Json weight(const Weight& w)
{
  Json a = Json::array();
  for (const auto& c : w.coords)
    a.push_back(rational(c));
  return a;
}

inline Json root(const RootVector& r) { return Json(r); }

inline Json subset(const SimpleSubset& s) { return Json(s.members()); }

/// {alpha, beta, value} for every pair with α + β a root.
inline Json structure_constants(const StructureConstants& sc)
{
  const auto& rs = sc.roots();
  Json entries = Json::array();
  for (int a = 0; a < static_cast<int>(rs.num_roots()); ++a)
    for (int b = 0; b < static_cast<int>(rs.num_roots()); ++b)
      if (rs.is_root(rs.root(a) + rs.root(b)))
        entries.push_back({{"alpha", root(rs.root(a))}, {"beta", root(rs.root(b))}, {"value", sc(a, b)}});
  return document({{"type", rs.label()}, {"entries", std::move(entries)}});
}

inline Json chevalley_report(const RootSystem& rs, const ChevalleyReport& rep)
{
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"relation", c.relation}, {"passed", c.passed}, {"counterexample", c.counterexample}});
  return {{"type", rs.label()}, {"passed", rep.all_passed()}, {"checks", std::move(checks)}};
}

/// Exponents of a PBW monomial split into f (by root index), h and e blocks.
inline Json monomial(const Enveloping& U, const Monomial& m)
{
  const auto& rs = U.roots();
  std::vector<int> f(rs.num_positive()), h(rs.rank()), e(rs.num_positive());
  for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
  {
    f[k] = m[U.f_letter(k)];
    e[k] = m[U.e_letter(k)];
  }
  for (int i = 0; i < rs.rank(); ++i)
    h[i] = m[U.h_letter(i)];
  return {{"f", f}, {"h", h}, {"e", e}};
}

inline Json element(const Enveloping& U, const Element& x)
{
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms())
  {
    Json t = monomial(U, m);
    t["coeff"] = rational(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

/// Weight multiplicities sorted by height of ν.
inline Json character(const RootSystem& rs, const Character& ch)
{
  std::vector<std::pair<RootVector, long>> rows(ch.by_nu.begin(), ch.by_nu.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return height(a.first) < height(b.first); });
  Json entries = Json::array();
  for (const auto& [nu, d] : rows)
    entries.push_back({{"nu", root(nu)}, {"weight", weight(ch.highest_weight - rs.to_weight(nu))}, {"dim", d}});
  return {{"type", rs.label()},
          {"highest_weight", weight(ch.highest_weight)},
          {"depth", ch.depth},
          {"weights", std::move(entries)}};
}

inline Json module_label(const Enveloping& U, const ModuleLabel& label)
{
  Json m = monomial(U, label.f);
  return {{"f", m["f"]}, {"t", label.t}};
}

/// Action of x on the ν weight space as sparse [row, column, value] triplets,
/// rows indexed by the target basis and columns by the source basis.
inline Json module_action(const HighestWeightModule& M, const Element& x, const RootVector& nu)
{
  const auto& U = M.algebra();
  auto source = M.basis(nu);
  Json triplets = Json::array();
  std::map<ModuleLabel, std::size_t> rows;
  std::vector<ModuleLabel> target;
  for (std::size_t j = 0; j < source.size(); ++j)
    for (const auto& [label, c] : M.act(x, source[j]))
    {
      auto [it, inserted] = rows.try_emplace(label, target.size());
      if (inserted)
        target.push_back(label);
      triplets.push_back({it->second, j, rational(c)});
    }
  Json src = Json::array(), tgt = Json::array();
  for (const auto& l : source)
    src.push_back(module_label(U, l));
  for (const auto& l : target)
    tgt.push_back(module_label(U, l));
  return {{"nu", root(nu)}, {"source_basis", src}, {"target_basis", tgt}, {"triplets", triplets}};
}

inline Json admissibility(const AdmissibilityReport& r)
{
  Json vals = Json::array();
  for (long v : r.valuations)
    vals.push_back(v == kInfiniteValuation ? Json("inf") : Json(v));
  return {{"weight", weight(r.weight)}, {"p", r.p}, {"n", r.n}, {"valuations", vals}, {"admissible", r.admissible}};
}

inline Json certificate(const RootSystem& rs, const Certificate& c)
{
  Json out;
  out["kind"] = to_string(c.kind);
  out["weight"] = weight(c.weight);
  switch (c.kind)
  {
  case Certificate::Kind::condition_star:
  {
    out["subset"] = subset(c.subset);
    Json w = Json::array();
    for (const auto& [beta, gamma] : c.witnesses)
      w.push_back({{"beta", root(rs.root(beta))},
                   {"pairing", rational(rs.pairing(c.weight + rs.rho(), beta))},
                   {"gamma", root(rs.root(gamma))},
                   {"reflected", root(reflect_root(rs, beta, gamma))}});
    out["witnesses"] = std::move(w);
    break;
  }
  case Certificate::Kind::condition_star_star:
  {
    out["subset"] = subset(c.subset);
    Json pairings = Json::array();
    for (int k = 0; k < static_cast<int>(rs.num_positive()); ++k)
      pairings.push_back({{"root", root(rs.root(k))}, {"pairing", rational(rs.pairing(c.weight + rs.rho(), k))}});
    out["pairings"] = std::move(pairings);
    break;
  }
  case Certificate::Kind::reflection_step:
    out["simple_root"] = c.step->simple;
    out["pairing"] = rational(c.step->pairing);
    out["result"] = weight(c.step->to);
    break;
  case Certificate::Kind::case3_extension:
    out["mu"] = weight(*c.mu);
    out["reflected_by"] = c.reflected_by;
    out["parabolic"] = subset(c.subset);
    out["check_depth"] = c.check_depth;
    break;
  }
  out["verified"] = c.verified;
  return out;
}

inline Json case_report(const RootSystem& rs, const CaseReport& r)
{
  Json certs = Json::array();
  for (const auto& c : r.certificates)
    certs.push_back(certificate(rs, c));
  Json chain = Json::array();
  for (const auto& w : r.chain)
    chain.push_back(weight(w));
  Json checks = Json::object();
  for (const auto& [k, v] : r.checks)
    checks[k] = v;
  return document({{"input", {{"type", r.type_label}, {"weight", weight(r.lambda)}, {"p", r.p}, {"n", r.n}}},
                   {"case", to_string(r.kind)},
                   {"certificates", std::move(certs)},
                   {"chain", std::move(chain)},
                   {"checks", std::move(checks)},
                   {"conclusion", r.conclusion}});
}

} // namespace lierep::json

#endif // LIEREP_JSON_HPP
