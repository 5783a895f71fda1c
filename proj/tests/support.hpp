#ifndef LIEREP_TESTS_SUPPORT_HPP
#define LIEREP_TESTS_SUPPORT_HPP

#include "lierep/lierep.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace lierep::testing
{

inline std::shared_ptr<const Enveloping> algebra(char type, int rank)
{
  static std::map<std::string, std::shared_ptr<const Enveloping>> cache;
  std::string key = std::string(1, type) + std::to_string(rank);
  auto it = cache.find(key);
  if (it != cache.end())
    return it->second;
  auto U = make_enveloping(RootSystem::build(type, rank));
  cache.emplace(key, U);
  return U;
}

inline Weight weight(std::initializer_list<Rational> coords)
{
  Weight w;
  w.coords.assign(coords.begin(), coords.end());
  return w;
}

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_max = 5)
{
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return ratio(num(rng), den(rng));
}

/// A non-integral rational with small numerator and denominator in {2,3,4,5,7}.
inline Rational random_nonintegral(std::mt19937& rng)
{
  static const int dens[] = {2, 3, 4, 5, 7};
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> pick(0, 4);
  for (;;)
  {
    Rational q = ratio(num(rng), dens[pick(rng)]);
    if (!is_integer(q))
      return q;
  }
}

/// Random element with `terms` monomials of total degree at most `max_degree`.
inline Element random_element(const Enveloping& U, std::mt19937& rng, int terms, int max_degree)
{
  std::uniform_int_distribution<int> letter(0, U.num_letters() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Element x;
  for (int k = 0; k < terms; ++k)
  {
    Monomial m = U.unit_monomial();
    int d = deg(rng);
    for (int j = 0; j < d; ++j)
      ++m[letter(rng)];
    x.add(m, random_rational(rng, 5, 3));
  }
  return x;
}

/// Independent Kostant partition count: coefficient extraction from
/// Π_β 1/(1 − x^β) by dynamic programming over the positive roots.
inline long kostant_dp(const RootSystem& rs, const RootVector& nu)
{
  const int r = rs.rank();
  std::vector<int> stride(r + 1, 1);
  for (int i = 0; i < r; ++i)
    stride[i + 1] = stride[i] * (nu[i] + 1);
  std::vector<long> table(stride[r], 0);
  table[0] = 1;
  auto decode = [&](int idx) {
    RootVector v(r);
    for (int i = 0; i < r; ++i)
      v[i] = (idx / stride[i]) % (nu[i] + 1);
    return v;
  };
  for (const auto& beta : rs.positive_roots())
    for (int idx = 0; idx < stride[r]; ++idx)
    {
      RootVector v = decode(idx);
      bool fits = true;
      int prev = 0;
      for (int i = 0; i < r; ++i)
      {
        if (v[i] < beta[i])
          fits = false;
        else
          prev += (v[i] - beta[i]) * stride[i];
      }
      if (fits)
        table[idx] += table[prev];
    }
  return table[stride[r] - 1];
}

/// Matrix of a PBW element in the adjoint representation, evaluated word by word.
inline Matrix adjoint_image(const Enveloping& U, const Element& x)
{
  const auto& sc = U.constants();
  const std::size_t d = sc.dimension();
  Matrix out(d, d);
  for (const auto& [m, c] : x.terms())
  {
    Matrix acc = Matrix::identity(d);
    for (int l : U.word(m))
    {
      int idx = 0;
      switch (U.kind(l))
      {
      case Enveloping::LetterKind::f: idx = U.roots().negative(U.letter_index(l)); break;
      case Enveloping::LetterKind::h: idx = sc.h_index(U.letter_index(l)); break;
      case Enveloping::LetterKind::e: idx = U.letter_index(l); break;
      }
      acc = acc * sc.ad_matrix(idx);
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out(i, j) += c * acc(i, j);
  }
  return out;
}

inline bool matrices_equal(const Matrix& a, const Matrix& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return false;
  return true;
}

} // namespace lierep::testing

#endif // LIEREP_TESTS_SUPPORT_HPP
