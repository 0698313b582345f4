#include "almab/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace almab {

Partition::Partition(std::vector<int> parts) : m_parts(std::move(parts))
{
  for (int p : m_parts)
    if (p <= 0)
      throw std::invalid_argument("partition parts must be positive, got " + std::to_string(p));
  std::sort(m_parts.begin(), m_parts.end(), std::greater<>());
  m_sum = std::accumulate(m_parts.begin(), m_parts.end(), 0);
}

Partition Partition::from_multiplicities(const std::map<int, int>& mult)
{
  std::vector<int> parts;
  for (auto [i, count] : mult) {
    if (count < 0)
      throw std::invalid_argument("negative multiplicity for part " + std::to_string(i));
    parts.insert(parts.end(), count, i);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const
{
  return static_cast<int>(std::count(m_parts.begin(), m_parts.end(), i));
}

std::map<int, int> Partition::multiplicities() const
{
  std::map<int, int> mult;
  for (int p : m_parts)
    ++mult[p];
  return mult;
}

std::string Partition::to_string() const
{
  std::string out;
  for (std::size_t k = 0; k < m_parts.size(); ++k) {
    if (k)
      out += ',';
    out += std::to_string(m_parts[k]);
  }
  return out;
}

Partition parse_partition(std::string_view text)
{
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ')
      token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
      token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("cannot parse partition '" + std::string(text) + "'");
    if (value <= 0)
      throw std::invalid_argument("partition parts must be positive in '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
  if (n < 0)
    throw std::invalid_argument("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, out);
  return out;
}

std::int64_t restricted_count(int m, int n, int r)
{
  if (m < 0 || n < 0 || r < 0)
    throw std::invalid_argument("restricted_count: negative argument");
  if (m == 0)
    return 1;
  // ways[k][s]: partitions of s into exactly k parts, all of size <= the part bound seen so far
  std::vector<std::vector<std::int64_t>> ways(n + 1, std::vector<std::int64_t>(m + 1, 0));
  ways[0][0] = 1;
  for (int part = 1; part <= std::min(r, m); ++part)
    for (int k = 1; k <= n; ++k)
      for (int s = part; s <= m; ++s)
        ways[k][s] += ways[k - 1][s - part];
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k)
    total += ways[k][m];
  return total;
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t t = 1; t <= k; ++t)
    result = result * (n - k + t) / t;
  return result;
}

} // namespace almab
