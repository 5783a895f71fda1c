#ifndef LIEREP_MATRIX_HPP
#define LIEREP_MATRIX_HPP

#include "lierep/rational.hpp"

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace lierep
{

/// Dense matrix over Q with exact Gaussian elimination.
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  template <class Int>
  static Matrix from_integers(const std::vector<std::vector<Int>>& rows)
  {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = Rational(static_cast<long>(rows[i][j]));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

  Matrix transpose() const
  {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const
  {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
      {
        const Rational& a = (*this)(i, k);
        if (a == 0)
          continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) += a * o(k, j);
      }
    return r;
  }

  bool is_symmetric() const
  {
    if (rows_ != cols_)
      return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i))
          return false;
    return true;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref()
  {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c)
    {
      std::size_t sel = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if ((*this)(i, c) != 0)
        {
          sel = i;
          break;
        }
      if (sel == rows_)
        continue;
      swap_rows(sel, r);
      Rational inv = 1 / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j)
        (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i)
      {
        if (i == r || (*this)(i, c) == 0)
          continue;
        Rational f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const
  {
    Matrix m = *this;
    return m.rref().size();
  }

  Rational determinant() const
  {
    assert(rows_ == cols_);
    Matrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c)
    {
      std::size_t sel = rows_;
      for (std::size_t i = c; i < rows_; ++i)
        if (m(i, c) != 0)
        {
          sel = i;
          break;
        }
      if (sel == rows_)
        return 0;
      if (sel != c)
      {
        m.swap_rows(sel, c);
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i)
      {
        if (m(i, c) == 0)
          continue;
        Rational f = m(i, c) / m(c, c);
        for (std::size_t j = c; j < cols_; ++j)
          m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  Matrix inverse() const
  {
    assert(rows_ == cols_);
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = 0; j < n; ++j)
        aug(i, j) = (*this)(i, j);
      aug(i, n + i) = 1;
    }
    auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1)
      throw PreconditionError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        inv(i, j) = aug(i, n + j);
    return inv;
  }

private:
  void swap_rows(std::size_t a, std::size_t b)
  {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

} // namespace lierep

#endif // LIEREP_MATRIX_HPP
