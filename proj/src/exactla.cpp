#include "almab/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace almab {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
  : m_rows(rows), m_cols(cols), m_data(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix t(m_cols, m_rows);
  for (std::size_t r = 0; r < m_rows; ++r)
    for (std::size_t c = 0; c < m_cols; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const
{
  return std::all_of(m_data.begin(), m_data.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0)
          out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: dimension mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.m_data.size(); ++i)
    out.m_data[i] += b.m_data[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a)
{
  RationalMatrix out = a;
  for (auto& x : out.m_data)
    x = -x;
  return out;
}

std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v)
{
  if (m.cols() != v.size())
    throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0 && sgn(v[c]) != 0)
        out[r] += m(r, c) * v[c];
  return out;
}

namespace {

struct DisjointSets
{
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Fraction-free elimination on a dense integer block; entries are destroyed.
std::size_t bareiss_rank(std::vector<std::vector<Integer>>& a, std::size_t cols)
{
  const std::size_t rows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  Integer scratch;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][c]) == 0)
        continue;
      if (pivot == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[pivot][c].get_mpz_t()) < 0)
        pivot = i;
    }
    if (pivot == rows)
      continue;
    std::swap(a[r], a[pivot]);
    const Integer piv = a[r][c];
    const bool unit_ratio = (piv == prev);
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = a[i];
      if (sgn(row[c]) == 0) {
        if (unit_ratio)
          continue;
        for (std::size_t j = c + 1; j < cols; ++j)
          if (sgn(row[j]) != 0) {
            row[j] *= piv;
            mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
          }
        continue;
      }
      const Integer factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        const Integer& top = a[r][j];
        if (sgn(top) == 0 && sgn(row[j]) == 0)
          continue;
        scratch = piv * row[j];
        if (sgn(top) != 0)
          scratch -= factor * top;
        mpz_divexact(row[j].get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

} // namespace

std::size_t rank(const RationalMatrix& m)
{
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0)
    return 0;

  DisjointSets sets(rows + cols);
  std::vector<bool> row_used(rows, false);
  std::vector<bool> col_used(cols, false);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(m(r, c)) != 0) {
        sets.unite(r, rows + c);
        row_used[r] = col_used[c] = true;
      }

  // component root -> (rows, cols)
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  std::vector<long> block_of(rows + cols, -1);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!row_used[r])
      continue;
    std::size_t root = sets.find(r);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].first.push_back(r);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (!col_used[c])
      continue;
    blocks[block_of[sets.find(rows + c)]].second.push_back(c);
  }

  std::size_t total = 0;
  for (const auto& [block_rows, block_cols] : blocks) {
    std::vector<std::vector<Integer>> a(block_rows.size(), std::vector<Integer>(block_cols.size()));
    for (std::size_t i = 0; i < block_rows.size(); ++i) {
      // clear denominators row by row; rank is unchanged
      Integer scale = 1;
      for (std::size_t c : block_cols) {
        const Rational& x = m(block_rows[i], c);
        if (sgn(x) != 0)
          mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
      }
      for (std::size_t j = 0; j < block_cols.size(); ++j) {
        const Rational& x = m(block_rows[i], block_cols[j]);
        if (sgn(x) != 0)
          a[i][j] = x.get_num() * (scale / x.get_den());
      }
    }
    total += bareiss_rank(a, block_cols.size());
  }
  return total;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r])
      x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0)
        continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(rows[r][j]) != 0)
          rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m)
{
  std::vector<std::vector<Rational>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows[r].assign(m.row(r).begin(), m.row(r).end());
  return rows;
}

} // namespace

std::size_t rank_gaussian(const RationalMatrix& m)
{
  auto a = to_rows(m);
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t step = 0; step < cols && r < a.size(); ++step) {
    const std::size_t c = cols - 1 - step;
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0)
        continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(a[r][j]) != 0)
          a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t kernel_dim(const RationalMatrix& m)
{
  return m.cols() - rank(m);
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m)
{
  auto rows = to_rows(m);
  const std::size_t cols = m.cols();
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> power_ranks(const RationalMatrix& m)
{
  if (m.rows() != m.cols())
    throw std::domain_error("power_ranks: matrix is not square");
  std::vector<std::size_t> ranks;
  RationalMatrix power = m;
  for (std::size_t k = 1; k <= m.rows() + 1; ++k) {
    std::size_t rk = rank(power);
    ranks.push_back(rk);
    if (rk == 0)
      return ranks;
    power = power * m;
  }
  throw std::domain_error("power_ranks: matrix is not nilpotent");
}

Partition jordan_type_from_ranks(std::span<const std::size_t> ranks, std::size_t size)
{
  auto r = [&](std::size_t k) -> long {
    if (k == 0)
      return static_cast<long>(size);
    return k <= ranks.size() ? static_cast<long>(ranks[k - 1]) : 0L;
  };
  std::map<int, int> mult;
  for (std::size_t i = 1; i <= ranks.size() + 1; ++i) {
    long count = r(i - 1) - 2 * r(i) + r(i + 1);
    if (count < 0)
      throw std::domain_error("jordan_type_from_ranks: inconsistent rank sequence");
    if (count > 0)
      mult[static_cast<int>(i)] = static_cast<int>(count);
  }
  Partition p = Partition::from_multiplicities(mult);
  if (static_cast<std::size_t>(p.sum()) != size)
    throw std::domain_error("jordan_type_from_ranks: rank sequence does not account for the full size");
  return p;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors)
{
  Subspace s(ambient);
  s.m_basis = vectors;
  for (const auto& v : s.m_basis)
    if (v.size() != ambient)
      throw std::invalid_argument("Subspace::span: vector of wrong length");
  rref(s.m_basis, ambient);
  return s;
}

Subspace Subspace::whole(std::size_t ambient)
{
  std::vector<std::size_t> all(ambient);
  std::iota(all.begin(), all.end(), 0);
  return coordinate(ambient, all);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices)
{
  std::vector<std::vector<Rational>> vectors;
  for (auto i : indices) {
    std::vector<Rational> v(ambient);
    v.at(i) = 1;
    vectors.push_back(std::move(v));
  }
  return span(ambient, vectors);
}

bool Subspace::contains(const std::vector<Rational>& v) const
{
  std::vector<Rational> rest = v;
  for (const auto& b : m_basis) {
    std::size_t p = 0;
    while (sgn(b[p]) == 0)
      ++p;
    if (sgn(rest[p]) == 0)
      continue;
    Rational f = rest[p];
    for (std::size_t j = 0; j < m_ambient; ++j)
      if (sgn(b[j]) != 0)
        rest[j] -= f * b[j];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const
{
  return std::all_of(other.m_basis.begin(), other.m_basis.end(),
                     [&](const auto& v) { return contains(v); });
}

std::optional<std::vector<std::size_t>> Subspace::coordinate_indices() const
{
  std::vector<std::size_t> indices;
  for (const auto& b : m_basis) {
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < m_ambient; ++j)
      if (sgn(b[j]) != 0) {
        ++nonzero;
        where = j;
      }
    if (nonzero != 1)
      return std::nullopt;
    indices.push_back(where);
  }
  std::sort(indices.begin(), indices.end());
  return indices;
}

RationalMatrix Subspace::annihilator() const
{
  if (m_basis.empty())
    return RationalMatrix::identity(m_ambient);
  RationalMatrix b(m_basis.size(), m_ambient);
  for (std::size_t r = 0; r < m_basis.size(); ++r)
    for (std::size_t c = 0; c < m_ambient; ++c)
      b(r, c) = m_basis[r][c];
  auto ann = nullspace(b);
  RationalMatrix out(ann.size(), m_ambient);
  for (std::size_t r = 0; r < ann.size(); ++r)
    for (std::size_t c = 0; c < m_ambient; ++c)
      out(r, c) = ann[r][c];
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b)
{
  if (a.m_ambient != b.m_ambient)
    throw std::invalid_argument("subspace sum: ambient mismatch");
  auto vectors = a.m_basis;
  vectors.insert(vectors.end(), b.m_basis.begin(), b.m_basis.end());
  return Subspace::span(a.m_ambient, vectors);
}

} // namespace almab
