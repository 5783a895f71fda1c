// lierep: classification reports, characters, prime tables and verification suites.

#include "lierep/lierep.hpp"
#include "suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace lierep;

namespace
{

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Options
{
  std::string type = "A2";
  std::string weight;
  long prime = 5;
  long n = 0;
  int depth = -1;
  std::string parabolic;
  std::string shifts;
  std::string range;
  std::string suite = "all";
  bool simple = false;
  bool json = false;
};

/// "1,3" → {α₁, α₃}; indices are 1-based as in α₁, α₂, …
SimpleSubset parse_parabolic(const std::string& text, int rank)
{
  SimpleSubset out;
  if (text.empty())
    return out;
  for (const auto& q : parse_rational_list(text))
  {
    if (!is_integer(q))
      throw ParseError("simple root index '" + to_string(q) + "' is not an integer");
    long i = q.get_num().get_si();
    if (i < 1 || i > rank)
      throw PreconditionError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    out.insert(static_cast<int>(i - 1));
  }
  return out;
}

std::string subset_str(const SimpleSubset& s)
{
  std::string out = "{";
  bool first = true;
  for (int i : s.members())
  {
    out += (first ? "a" : ", a") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string primes_str(const std::set<long>& primes)
{
  std::string out = "{";
  for (auto it = primes.begin(); it != primes.end(); ++it)
    out += (it == primes.begin() ? "" : ", ") + std::to_string(*it);
  return out + "}";
}

void print(const json::Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_classify(const Options& o)
{
  auto rs = RootSystem::from_label(o.type);
  Weight lambda = rs.parse_weight(o.weight);
  auto U = make_enveloping(rs);
  auto report = classify_sl3(U, lambda, o.prime, o.n, o.depth < 0 ? 6 : o.depth);
  bool ok = report.all_checks_pass();
  for (const auto& c : report.certificates)
    ok = ok && verify_certificate(U, c);
  if (o.json)
  {
    print(json::case_report(rs, report));
    return ok ? 0 : kExitVerifyFailed;
  }
  std::cout << "type        " << report.type_label << "\n"
            << "weight      " << lambda.str() << "\n"
            << "p, n        " << report.p << ", " << report.n << "\n"
            << "case        " << to_string(report.kind) << "\n"
            << "chain      ";
  for (const auto& w : report.chain)
    std::cout << " " << w.str();
  std::cout << "\ncertificates\n";
  for (const auto& c : report.certificates)
  {
    std::cout << "  " << std::left << std::setw(20) << to_string(c.kind) << " weight " << c.weight.str();
    switch (c.kind)
    {
    case Certificate::Kind::condition_star:
    case Certificate::Kind::condition_star_star: std::cout << " I=" << subset_str(c.subset); break;
    case Certificate::Kind::reflection_step:
      std::cout << " s" << c.step->simple + 1 << " pairing " << to_string(c.step->pairing) << " -> " << c.step->to.str();
      break;
    case Certificate::Kind::case3_extension:
      std::cout << " mu " << c.mu->str() << " parabolic " << subset_str(c.subset) << " depth " << c.check_depth;
      break;
    }
    std::cout << (c.verified ? "  verified" : "  NOT VERIFIED") << "\n";
  }
  std::cout << "checks\n";
  for (const auto& [name, pass] : report.checks)
    std::cout << "  " << std::left << std::setw(24) << name << (pass ? "pass" : "FAIL") << "\n";
  std::cout << "conclusion  " << report.conclusion << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

int run_character(const Options& o)
{
  auto rs = RootSystem::from_label(o.type);
  Weight lambda = rs.parse_weight(o.weight);
  auto U = make_enveloping(rs);
  int depth = o.depth < 0 ? 4 : o.depth;
  auto I = parse_parabolic(o.parabolic, rs.rank());
  Character ch = o.simple ? simple_dims(U, lambda, depth) : parabolic_verma(U, I, lambda, depth).character();
  if (o.json)
  {
    print(json::document(json::character(rs, ch)));
    return 0;
  }
  std::string what = o.simple ? "L" : (I.empty() ? "M" : "M_" + subset_str(I));
  std::cout << what << "(" << lambda.str() << ") on " << rs.label() << ", depth " << depth << "\n";
  std::vector<std::pair<RootVector, long>> rows(ch.by_nu.begin(), ch.by_nu.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return height(a.first) < height(b.first); });
  std::cout << std::left << std::setw(16) << "nu" << std::setw(24) << "weight" << "dim\n";
  for (const auto& [nu, d] : rows)
  {
    std::ostringstream v;
    v << "(";
    for (std::size_t i = 0; i < nu.size(); ++i)
      v << (i ? "," : "") << nu[i];
    v << ")";
    std::cout << std::left << std::setw(16) << v.str() << std::setw(24) << (lambda - rs.to_weight(nu)).str() << d << "\n";
  }
  return 0;
}

int run_primes(const Options& o)
{
  auto rs = RootSystem::from_label(o.type);
  auto bad = rs.bad_primes();
  long good = 2;
  while (bad.contains(good) || !is_prime(good))
    ++good;
  if (o.json)
  {
    json::Json subs = json::Json::array();
    for (const auto& s : rs.closed_subsystems())
    {
      json::Json simple = json::Json::array();
      for (int k : s.simple_roots)
        simple.push_back(json::root(rs.root(k)));
      subs.push_back({{"simple_roots", simple}, {"size", s.members.size()}, {"determinant", s.determinant}});
    }
    print(json::document({{"type", rs.label()}, {"bad_primes", bad}, {"smallest_good_prime", good},
                          {"closed_subsystems", subs}}));
    return 0;
  }
  std::cout << "type " << rs.label() << "\n";
  std::cout << std::left << std::setw(8) << "roots" << std::setw(14) << "determinant" << "base\n";
  for (const auto& s : rs.closed_subsystems())
  {
    std::cout << std::left << std::setw(8) << s.members.size() << std::setw(14) << s.determinant;
    for (int k : s.simple_roots)
      std::cout << detail::root_str(rs, k) << " ";
    std::cout << "\n";
  }
  std::cout << "bad primes " << primes_str(bad) << "\n";
  std::cout << "smallest good prime " << good << "\n";
  return 0;
}

int run_verify(const Options& o)
{
  int depth = o.depth < 0 ? 5 : o.depth;
  if (depth < 1)
    throw PreconditionError("verify needs depth at least 1");
  std::vector<suites::SuiteResult> results;
  bool found = false;
  for (const auto& [name, suite] : suites::registry())
  {
    if (o.suite != "all" && o.suite != name)
      continue;
    found = true;
    suites::SuiteResult r;
    r.name = name;
    try
    {
      suite(r, depth);
    }
    catch (const std::exception& e)
    {
      r.require(false, std::string("exception: ") + e.what());
    }
    results.push_back(r);
  }
  if (!found)
    throw ParseError("unknown suite '" + o.suite + "'");
  bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (o.json)
  {
    json::Json rows = json::Json::array();
    for (const auto& r : results)
    {
      json::Json row{{"suite", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures}};
      if (!r.passed())
        row["counterexample"] = r.counterexample;
      rows.push_back(row);
    }
    print(json::document({{"depth", depth}, {"suites", rows}, {"passed", all}}));
  }
  else
  {
    for (const auto& r : results)
    {
      std::cout << std::left << std::setw(12) << r.name << (r.passed() ? "PASS" : "FAIL") << "  " << r.checks
                << " checks";
      if (!r.passed())
        std::cout << ", " << r.failures << " failed; first: " << r.counterexample;
      std::cout << "\n";
    }
    std::cout << (all ? "all suites passed" : "some suites failed") << "\n";
  }
  return all ? 0 : kExitVerifyFailed;
}

/// "lo:hi:step" → lo, lo+step, …, ≤ hi.
std::vector<Rational> parse_range(const std::string& text)
{
  std::string t = text;
  std::replace(t.begin(), t.end(), ':', ',');
  auto parts = parse_rational_list(t);
  if (parts.size() != 3)
    throw ParseError("range '" + text + "' must have the form lo:hi:step");
  if (parts[2] <= 0)
    throw PreconditionError("range step must be positive");
  std::vector<Rational> out;
  for (Rational q = parts[0]; q <= parts[1]; q += parts[2])
  {
    out.push_back(q);
    if (out.size() > 10000)
      throw PreconditionError("range '" + text + "' has more than 10000 points");
  }
  return out;
}

struct PhiRun
{
  std::vector<Rational> c;
  std::vector<Rational> substitution;
  Weight target;
  std::vector<std::pair<std::string, bool>> checks;

  bool passed() const
  {
    return std::all_of(checks.begin(), checks.end(), [](const auto& p) { return p.second; });
  }
};

PhiRun phi_run(std::shared_ptr<const Enveloping> U, const SimpleSubset& I, const Weight& lambda,
               const std::vector<Rational>& c, const DeformationContext& ctx)
{
  const auto& rs = U->roots();
  auto outside = I.complement(rs.rank()).members();
  PhiMap phi(U, I, lambda, c, ctx);
  PhiRun run{c, phi.substitution(), phi.target().highest_weight(), {}};
  run.checks.emplace_back("surjective", phi_c_surjective(phi, ctx.depth));
  for (std::size_t k = 0; k < outside.size(); ++k)
    run.checks.emplace_back("hw_scalar a" + std::to_string(outside[k] + 1),
                            hw_scalar_check(U, I, lambda, c, static_cast<int>(k), ctx));
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
  bool hom = true;
  for (const auto& nu : depth_vectors(rs.rank(), I, ctx.depth - 1))
    for (const auto& b : phi.source().basis(nu))
    {
      if (label_depth(b, *U) > ctx.depth - 1)
        continue;
      ModuleVector m;
      add_term(m, b, 1);
      for (const auto& x : gens)
        hom = hom && phi_c_homomorphism_check(phi, x, m);
    }
  run.checks.emplace_back("homomorphism", hom);
  return run;
}

int run_phi_check(const Options& o)
{
  auto rs = RootSystem::from_label(o.type);
  Weight lambda = rs.parse_weight(o.weight);
  auto I = parse_parabolic(o.parabolic, rs.rank());
  std::size_t central = I.complement(rs.rank()).members().size();
  int depth = o.depth < 0 ? 3 : o.depth;
  if (depth < 1)
    throw PreconditionError("phi-check needs depth at least 1");
  auto U = make_enveloping(rs);
  DeformationContext ctx{o.prime, o.n, depth};

  // Shift vectors: one explicit vector, or the grid range^central.
  std::vector<std::vector<Rational>> grid;
  if (!o.range.empty())
  {
    if (!o.shifts.empty())
      throw ParseError("--c and --c-range are exclusive");
    auto values = parse_range(o.range);
    grid.push_back({});
    for (std::size_t k = 0; k < central; ++k)
    {
      std::vector<std::vector<Rational>> next;
      for (const auto& g : grid)
        for (const auto& v : values)
        {
          next.push_back(g);
          next.back().push_back(v);
        }
      grid = std::move(next);
    }
  }
  else
    grid.push_back(o.shifts.empty() ? std::vector<Rational>(central, Rational(0)) : parse_rational_list(o.shifts));

  std::vector<PhiRun> runs;
  for (const auto& c : grid)
    runs.push_back(phi_run(U, I, lambda, c, ctx));
  bool all = std::all_of(runs.begin(), runs.end(), [](const auto& r) { return r.passed(); });

  auto rationals = [](const std::vector<Rational>& v) {
    json::Json out = json::Json::array();
    for (const auto& q : v)
      out.push_back(json::rational(q));
    return out;
  };
  if (o.json)
  {
    json::Json rows = json::Json::array();
    for (const auto& r : runs)
    {
      json::Json res = json::Json::object();
      for (const auto& [name, ok] : r.checks)
        res[name] = ok;
      rows.push_back({{"c", rationals(r.c)},
                      {"substitution", rationals(r.substitution)},
                      {"target_weight", json::weight(r.target)},
                      {"checks", res},
                      {"passed", r.passed()}});
    }
    print(json::document({{"type", rs.label()},
                          {"weight", json::weight(lambda)},
                          {"parabolic", json::subset(I)},
                          {"p", o.prime},
                          {"n", o.n},
                          {"depth", depth},
                          {"runs", rows},
                          {"passed", all}}));
  }
  else
  {
    std::cout << "phi_c on " << rs.label() << " with I=" << subset_str(I) << ", weight " << lambda.str() << "\n";
    for (const auto& r : runs)
    {
      std::cout << "c " << Weight(r.c).str() << ", target highest weight " << r.target.str() << "\n";
      for (const auto& [name, ok] : r.checks)
        std::cout << "  " << std::left << std::setw(20) << name << (ok ? "pass" : "FAIL") << "\n";
    }
  }
  return all ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Highest weight modules of split semisimple Lie algebras: classification, characters and checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_weight) {
    sub->add_option("--type", o.type, "root system label, e.g. A2, B2, G2")->capture_default_str();
    auto* w = sub->add_option("--weight", o.weight, "weight in fundamental coordinates, e.g. 1/2,-1");
    if (needs_weight)
      w->required();
    sub->add_option("--depth", o.depth, "truncation depth");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("--prime", o.prime, "prime p")->capture_default_str();
    sub->add_option("--n", o.n, "deformation level n")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "classify a weight of sl3 and certify simplicity");
  add_common(classify, true);
  add_prime(classify);

  auto* character = app.add_subcommand("character", "weight multiplicities of a (parabolic) Verma or simple module");
  add_common(character, true);
  character->add_option("--parabolic", o.parabolic, "simple roots of the parabolic, 1-based, e.g. 1,2");
  character->add_flag("--simple", o.simple, "multiplicities of the simple quotient");

  auto* primes = app.add_subcommand("primes", "bad primes from closed root subsystems");
  add_common(primes, false);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suite, "suite name or all")->capture_default_str();
  verify->add_option("--depth", o.depth, "truncation depth (default 5)");
  verify->add_flag("--json", o.json, "machine-readable output");

  auto* phi = app.add_subcommand("phi-check", "check the map from the generalized Verma module onto its specialization");
  add_common(phi, true);
  add_prime(phi);
  phi->add_option("--parabolic", o.parabolic, "simple roots of the Levi, 1-based");
  phi->add_option("--c", o.shifts, "one rational shift per simple root outside the Levi");
  phi->add_option("--c-range", o.range, "grid lo:hi:step applied to every shift coordinate");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForVersion& e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return kExitParse;
  }

  try
  {
    if (classify->parsed())
      return run_classify(o);
    if (character->parsed())
      return run_character(o);
    if (primes->parsed())
      return run_primes(o);
    if (verify->parsed())
      return run_verify(o);
    return run_phi_check(o);
  }
  catch (const ParseError& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  catch (const PreconditionError& e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
