#ifndef LIEREP_RATIONAL_HPP
#define LIEREP_RATIONAL_HPP

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lierep
{

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when textual input (weights, types, rationals) does not parse.
class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// p-adic valuation of zero.
inline constexpr long kInfiniteValuation = LONG_MAX;

inline Rational parse_rational(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t')
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+')
    num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n(num), d(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Comma-separated list of rationals, e.g. "1/2,-1".
inline std::vector<Rational> parse_rational_list(std::string_view text)
{
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true)
  {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

/// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(const Integer& n, const Integer& d)
{
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Membership in {0, 1, 2, ...}.
inline bool is_natural0(const Rational& q) { return is_integer(q) && sgn(q) >= 0; }

/// Membership in {1, 2, 3, ...}.
inline bool is_natural(const Rational& q) { return is_integer(q) && sgn(q) > 0; }

inline long valuation(const Integer& z, unsigned long p)
{
  if (z == 0)
    return kInfiniteValuation;
  Integer t = abs(z);
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p))
  {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

/// v_p(q), with kInfiniteValuation for q = 0.
inline long valuation(const Rational& q, unsigned long p)
{
  if (q == 0)
    return kInfiniteValuation;
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

inline Rational rational_power(const Rational& base, unsigned long e)
{
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i)
    r *= base;
  return r;
}

inline Integer factorial(unsigned long n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline bool is_prime(long p)
{
  if (p < 2)
    return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace lierep

#endif // LIEREP_RATIONAL_HPP
