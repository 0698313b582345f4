#include "almab/exterior.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace almab::exterior {

int degree(Monomial m)
{
  return std::popcount(m);
}

int wedge_sign(Monomial a, Monomial b)
{
  if (a & b)
    return 0;
  // count pairs (x in a, y in b) with x > y
  int inversions = 0;
  for (Monomial rest = b; rest; rest &= rest - 1) {
    int y = std::countr_zero(rest);
    Monomial above = (y + 1 >= max_generators) ? 0 : (~Monomial{0} << (y + 1));
    inversions += std::popcount(a & above);
  }
  return (inversions % 2) ? -1 : 1;
}

void add_term(Form& f, Monomial m, long long coef)
{
  if (coef == 0)
    return;
  auto [it, inserted] = f.emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0)
      f.erase(it);
  }
}

Form wedge(const Form& a, const Form& b)
{
  Form out;
  for (auto [ma, ca] : a)
    for (auto [mb, cb] : b) {
      int s = wedge_sign(ma, mb);
      if (s)
        add_term(out, ma | mb, s * ca * cb);
    }
  return out;
}

std::vector<Monomial> monomials(int generators, int k)
{
  if (generators > max_generators)
    throw std::invalid_argument("too many exterior generators");
  std::vector<Monomial> out;
  if (k < 0 || k > generators)
    return out;
  std::vector<int> idx(k);
  for (int t = 0; t < k; ++t)
    idx[t] = t;
  while (true) {
    Monomial m = 0;
    for (int t : idx)
      m |= generator(t);
    out.push_back(m);
    int t = k - 1;
    while (t >= 0 && idx[t] == generators - k + t)
      --t;
    if (t < 0)
      break;
    ++idx[t];
    for (int u = t + 1; u < k; ++u)
      idx[u] = idx[u - 1] + 1;
  }
  return out;
}

Derivation::Derivation(std::vector<Form> on_generators, bool odd) : m_images(std::move(on_generators)), m_odd(odd)
{
  if (m_images.size() > static_cast<std::size_t>(max_generators))
    throw std::invalid_argument("too many exterior generators");
}

Form Derivation::apply(Monomial m) const
{
  Form out;
  int position = 0;
  for (Monomial rest = m; rest; rest &= rest - 1, ++position) {
    int g = std::countr_zero(rest);
    Monomial below = m & (generator(g) - 1);
    Monomial above = m & ~(below | generator(g));
    int koszul = (m_odd && position % 2) ? -1 : 1;
    for (auto [image, coef] : m_images.at(g)) {
      int s1 = wedge_sign(below, image);
      if (!s1)
        continue;
      int s2 = wedge_sign(below | image, above);
      if (!s2)
        continue;
      add_term(out, below | image | above, koszul * s1 * s2 * coef);
    }
  }
  return out;
}

Form Derivation::apply(const Form& f) const
{
  Form out;
  for (auto [m, c] : f)
    for (auto [m2, c2] : apply(m))
      add_term(out, m2, c * c2);
  return out;
}

RationalMatrix Derivation::matrix(const std::vector<Monomial>& source, const std::vector<Monomial>& target) const
{
  std::unordered_map<Monomial, std::size_t> row_of;
  row_of.reserve(target.size());
  for (std::size_t r = 0; r < target.size(); ++r)
    row_of.emplace(target[r], r);
  RationalMatrix out(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c)
    for (auto [m, coef] : apply(source[c])) {
      auto it = row_of.find(m);
      if (it == row_of.end())
        throw std::logic_error("derivation image leaves the target basis");
      out(it->second, c) = static_cast<long>(coef);
    }
  return out;
}

} // namespace almab::exterior
