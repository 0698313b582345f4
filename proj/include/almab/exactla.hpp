#ifndef ALMAB_EXACTLA_HPP
#define ALMAB_EXACTLA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "almab/partitions.hpp"

namespace almab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of exact rationals.
class RationalMatrix
{
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Rows given as nested integer lists; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  Rational& operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

  std::span<const Rational> row(std::size_t r) const { return {m_data.data() + r * m_cols, m_cols}; }

  RationalMatrix transpose() const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t m_rows = 0;
  std::size_t m_cols = 0;
  std::vector<Rational> m_data;
};

/// Exact rank. Rows and columns are first split into the connected components
/// of the nonzero pattern; each block is reduced by fraction-free (Bareiss)
/// elimination with partial pivoting on integer entries.
std::size_t rank(const RationalMatrix& m);

/// Exact rank by plain rational Gaussian elimination, pivoting on rows in
/// column order from the last column backwards. Independent of rank().
std::size_t rank_gaussian(const RationalMatrix& m);

std::size_t kernel_dim(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per entry.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// rank(M), rank(M^2), ... up to and including the first zero. Throws
/// std::domain_error if M is not square or not nilpotent.
std::vector<std::size_t> power_ranks(const RationalMatrix& m);

/// Jordan type of a nilpotent matrix of size `size` from power_ranks output,
/// via m_i = rank(M^{i-1}) - 2 rank(M^i) + rank(M^{i+1}).
Partition jordan_type_from_ranks(std::span<const std::size_t> ranks, std::size_t size);

/// Linear subspace of Q^dim, held as a reduced row echelon basis.
class Subspace
{
public:
  explicit Subspace(std::size_t ambient = 0) : m_ambient(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient() const { return m_ambient; }
  std::size_t dim() const { return m_basis.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return m_basis; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  /// Indices i such that the subspace is spanned by unit vectors e_i, if it is
  /// a coordinate subspace.
  std::optional<std::vector<std::size_t>> coordinate_indices() const;

  /// Matrix whose kernel is exactly this subspace (rows span the annihilator).
  RationalMatrix annihilator() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  bool operator==(const Subspace& other) const { return m_basis == other.m_basis && m_ambient == other.m_ambient; }

private:
  std::size_t m_ambient;
  std::vector<std::vector<Rational>> m_basis;
};

std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v);

} // namespace almab

#endif
