#ifndef ALMAB_PARTITIONS_HPP
#define ALMAB_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace almab {

/// A weakly decreasing sequence of positive integers.
///
/// Used both for the Jordan type of the complex block B (a partition of n)
/// and for the Jordan type of the adjoint matrix A (a partition of 2n+1).
class Partition
{
public:
  Partition() = default;

  /// Parts may be given in any order; they are sorted. Throws
  /// std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  /// Builds the partition with mult.at(i) parts equal to i. Zero counts are
  /// ignored, negative counts are rejected.
  static Partition from_multiplicities(const std::map<int, int>& mult);

  const std::vector<int>& parts() const { return m_parts; }
  int sum() const { return m_sum; }
  int length() const { return static_cast<int>(m_parts.size()); }
  bool empty() const { return m_parts.empty(); }
  int largest() const { return m_parts.empty() ? 0 : m_parts.front(); }

  /// Number of parts equal to i.
  int multiplicity(int i) const;
  std::map<int, int> multiplicities() const;

  /// "3,2,1"; the empty partition prints as "".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  /// Lexicographic on the part sequence.
  std::strong_ordering operator<=>(const Partition& other) const { return m_parts <=> other.m_parts; }

private:
  std::vector<int> m_parts;
  int m_sum = 0;
};

/// Parses comma-separated positive integers in any order ("1,3,2").
/// Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

/// All partitions of n, lexicographically decreasing: [n], [n-1,1], ..., [1,...,1].
std::vector<Partition> partitions_of(int n);

/// A(m, n, r): partitions of m into at most n parts, each part at most r.
std::int64_t restricted_count(int m, int n, int r);

std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace almab

#endif
