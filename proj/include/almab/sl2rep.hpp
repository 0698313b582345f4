#ifndef ALMAB_SL2REP_HPP
#define ALMAB_SL2REP_HPP

#include <cstdint>
#include <map>
#include <string>

namespace almab {

using Count = std::int64_t;

/// Finite-dimensional sl2(C)-module, stored as multiplicities of the
/// irreducibles W_i (dimension i, weights i-1, i-3, ..., 1-i).
///
/// The multiplicity map never holds zero entries, so structural equality is
/// module isomorphism.
class Sl2Module
{
public:
  Sl2Module() = default;

  static Sl2Module irreducible(int dim, Count copies = 1);
  static Sl2Module trivial() { return irreducible(1); }

  Count multiplicity(int dim) const;
  const std::map<int, Count>& multiplicities() const { return m_mult; }
  Count dimension() const;
  bool is_zero() const { return m_mult.empty(); }

  /// Adds `copies` copies of W_dim.
  void add(int dim, Count copies);

  /// Weight multiplicity function.
  std::map<int, Count> weights() const;

  /// "W_1 + 3W_2"; the zero module prints as "0".
  std::string to_string() const;

  Sl2Module& operator+=(const Sl2Module& other);
  friend Sl2Module operator+(Sl2Module a, const Sl2Module& b) { return a += b; }
  friend Sl2Module operator*(Count k, const Sl2Module& v);

  bool operator==(const Sl2Module&) const = default;
  auto operator<=>(const Sl2Module& other) const { return m_mult <=> other.m_mult; }

private:
  std::map<int, Count> m_mult;
};

/// Number of irreducible summands, i.e. the number of Jordan blocks of the
/// nilpotent generator.
Count delta(const Sl2Module& v);

/// Clebsch-Gordan: W_i (x) W_k = sum_{t < min(i,k)} W_{i+k-1-2t}.
Sl2Module tensor(const Sl2Module& v, const Sl2Module& w);

/// Exterior power of an irreducible, via the weight distribution of r-subsets
/// of the weight string (counted by dynamic programming).
Sl2Module wedge_irreducible(int i, int r);

/// Exterior power Lambda^r V, expanded summand by summand through
/// Lambda^r(W + V') = sum_a Lambda^a W (x) Lambda^{r-a} V'. Memoized.
Sl2Module wedge(const Sl2Module& v, int r);

/// Recovers the module from a weight multiset given as weight -> multiplicity.
/// Throws std::invalid_argument if the multiset is not symmetric under w -> -w
/// or is not the weight system of any module.
Sl2Module decompose_from_weights(const std::map<int, Count>& weights);

/// Reference computation of Lambda^r W_i: explicit enumeration of all r-element
/// subsets of the weight string followed by decompose_from_weights.
Sl2Module wedge_irreducible_oracle(int i, int r);

} // namespace almab

#endif
