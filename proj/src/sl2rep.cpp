#include "almab/sl2rep.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace almab {

Sl2Module Sl2Module::irreducible(int dim, Count copies)
{
  Sl2Module v;
  v.add(dim, copies);
  return v;
}

Count Sl2Module::multiplicity(int dim) const
{
  auto it = m_mult.find(dim);
  return it == m_mult.end() ? 0 : it->second;
}

Count Sl2Module::dimension() const
{
  Count total = 0;
  for (auto [i, m] : m_mult)
    total += i * m;
  return total;
}

void Sl2Module::add(int dim, Count copies)
{
  if (dim <= 0)
    throw std::invalid_argument("irreducible dimension must be positive");
  if (copies < 0)
    throw std::invalid_argument("negative multiplicity");
  if (copies > 0)
    m_mult[dim] += copies;
}

std::map<int, Count> Sl2Module::weights() const
{
  std::map<int, Count> mu;
  for (auto [i, m] : m_mult)
    for (int w = i - 1; w >= 1 - i; w -= 2)
      mu[w] += m;
  return mu;
}

std::string Sl2Module::to_string() const
{
  if (m_mult.empty())
    return "0";
  std::string out;
  for (auto [i, m] : m_mult) {
    if (!out.empty())
      out += " + ";
    if (m != 1)
      out += std::to_string(m);
    out += "W_" + std::to_string(i);
  }
  return out;
}

Sl2Module& Sl2Module::operator+=(const Sl2Module& other)
{
  for (auto [i, m] : other.m_mult)
    m_mult[i] += m;
  return *this;
}

Sl2Module operator*(Count k, const Sl2Module& v)
{
  if (k < 0)
    throw std::invalid_argument("negative scalar multiple of a module");
  Sl2Module out;
  if (k == 0)
    return out;
  for (auto [i, m] : v.m_mult)
    out.m_mult[i] = k * m;
  return out;
}

Count delta(const Sl2Module& v)
{
  Count total = 0;
  for (auto [i, m] : v.multiplicities())
    total += m;
  return total;
}

Sl2Module tensor(const Sl2Module& v, const Sl2Module& w)
{
  Sl2Module out;
  for (auto [i, mi] : v.multiplicities())
    for (auto [k, mk] : w.multiplicities())
      for (int t = 0; t < std::min(i, k); ++t)
        out.add(i + k - 1 - 2 * t, mi * mk);
  return out;
}

Sl2Module decompose_from_weights(const std::map<int, Count>& weights)
{
  for (auto [w, m] : weights) {
    if (m < 0)
      throw std::invalid_argument("negative weight multiplicity");
    auto mirror = weights.find(-w);
    if (m > 0 && (mirror == weights.end() || mirror->second != m))
      throw std::invalid_argument("weight multiset is not symmetric under negation");
  }
  auto mu = [&](int w) -> Count {
    auto it = weights.find(w);
    return it == weights.end() ? 0 : it->second;
  };
  Sl2Module out;
  Count dim = 0;
  for (auto [w, m] : weights) {
    if (w < 0 || m == 0)
      continue;
    Count copies = mu(w) - mu(w + 2);
    if (copies < 0)
      throw std::invalid_argument("weight multiplicities are not unimodal; not an sl2 weight system");
    out.add(w + 1, copies);
    dim += m * (w == 0 ? 1 : 2);
  }
  if (out.dimension() != dim)
    throw std::invalid_argument("weight multiset does not assemble into a module");
  return out;
}

Sl2Module wedge_irreducible(int i, int r)
{
  if (i <= 0 || r < 0)
    throw std::invalid_argument("wedge_irreducible: bad arguments");
  if (r > i)
    return {};
  // subsets[k][s]: k-subsets of {0,...,i-1} with element sum s. Position x
  // carries weight i-1-2x, so a subset of sum s has weight r(i-1) - 2s.
  int max_sum = i * (i - 1) / 2;
  std::vector<std::vector<Count>> subsets(r + 1, std::vector<Count>(max_sum + 1, 0));
  subsets[0][0] = 1;
  for (int x = 0; x < i; ++x)
    for (int k = std::min(r, x + 1); k >= 1; --k)
      for (int s = max_sum; s >= x; --s)
        subsets[k][s] += subsets[k - 1][s - x];
  std::map<int, Count> weights;
  for (int s = 0; s <= max_sum; ++s)
    if (subsets[r][s])
      weights[r * (i - 1) - 2 * s] += subsets[r][s];
  return decompose_from_weights(weights);
}

Sl2Module wedge_irreducible_oracle(int i, int r)
{
  if (i <= 0 || r < 0 || r > i)
    throw std::invalid_argument("wedge_irreducible_oracle: need 0 <= r <= i");
  std::vector<int> string;
  for (int w = i - 1; w >= 1 - i; w -= 2)
    string.push_back(w);
  std::vector<bool> pick(i, false);
  std::fill(pick.begin(), pick.begin() + r, true);
  std::map<int, Count> weights;
  do {
    int total = 0;
    for (int x = 0; x < i; ++x)
      if (pick[x])
        total += string[x];
    ++weights[total];
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return decompose_from_weights(weights);
}

namespace {

std::mutex g_wedge_mutex;
std::map<std::pair<Sl2Module, int>, Sl2Module> g_wedge_cache;

Sl2Module wedge_uncached(const Sl2Module& v, int r)
{
  if (r == 0)
    return Sl2Module::trivial();
  if (r > v.dimension())
    return {};
  auto top = std::prev(v.multiplicities().end());
  int dim = top->first;
  if (top->second == 1 && v.multiplicities().size() == 1)
    return wedge_irreducible(dim, r);

  Sl2Module rest;
  for (auto [i, m] : v.multiplicities())
    rest.add(i, i == dim ? m - 1 : m);

  Sl2Module out;
  for (int a = 0; a <= std::min(r, dim); ++a) {
    if (r - a > rest.dimension())
      continue;
    out += tensor(wedge_irreducible(dim, a), wedge(rest, r - a));
  }
  return out;
}

} // namespace

Sl2Module wedge(const Sl2Module& v, int r)
{
  if (r < 0)
    throw std::invalid_argument("wedge: negative degree");
  auto key = std::make_pair(v, r);
  {
    std::lock_guard lock(g_wedge_mutex);
    auto it = g_wedge_cache.find(key);
    if (it != g_wedge_cache.end())
      return it->second;
  }
  Sl2Module result = wedge_uncached(v, r);
  std::lock_guard lock(g_wedge_mutex);
  g_wedge_cache.emplace(std::move(key), result);
  return result;
}

} // namespace almab
