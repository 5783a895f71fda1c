#ifndef LIEREP_POLYNOMIAL_HPP
#define LIEREP_POLYNOMIAL_HPP

#include "lierep/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace lierep
{

/// Sparse polynomial in a fixed number of variables over Q.
class Polynomial
{
public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c)
  {
    Polynomial p(nvars);
    if (c != 0)
      p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i)
  {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted)
    {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  int total_degree() const
  {
    int d = -1;
    for (const auto& [e, c] : terms_)
    {
      int s = 0;
      for (unsigned x : e)
        s += static_cast<int>(x);
      d = std::max(d, s);
    }
    return d;
  }

  /// Degree in variable i (-1 for the zero polynomial).
  int degree_in(std::size_t i) const
  {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, static_cast<int>(e[i]));
    return d;
  }

  Rational evaluate(std::span<const Rational> point) const
  {
    Rational sum = 0;
    for (const auto& [e, c] : terms_)
    {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        t *= rational_power(point[i], e[i]);
      sum += t;
    }
    return sum;
  }

  Polynomial& operator+=(const Polynomial& o)
  {
    for (const auto& [e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o)
  {
    for (const auto& [e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s)
  {
    if (s == 0)
      terms_.clear();
    else
      for (auto& [e, c] : terms_)
        c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    Polynomial r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
      {
        Exponents e(r.nvars_, 0);
        for (std::size_t i = 0; i < ea.size(); ++i)
          e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i)
          e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

} // namespace lierep

#endif // LIEREP_POLYNOMIAL_HPP
