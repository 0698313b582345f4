#ifndef ALMAB_EXTERIOR_HPP
#define ALMAB_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "almab/exactla.hpp"

namespace almab::exterior {

/// A wedge monomial e^{i1} ^ ... ^ e^{ik} with i1 < ... < ik, as a bit set.
using Monomial = std::uint32_t;
constexpr int max_generators = 32;

/// Integer linear combination of monomials; no zero coefficients stored.
using Form = std::map<Monomial, long long>;

inline Monomial generator(int i) { return Monomial{1} << i; }
int degree(Monomial m);

/// Sign of a ^ b relative to the sorted monomial a | b; 0 if they overlap.
int wedge_sign(Monomial a, Monomial b);

Form wedge(const Form& a, const Form& b);
void add_term(Form& f, Monomial m, long long coef);

/// All degree-k monomials in `generators` variables, in lexicographic order of
/// their index tuples.
std::vector<Monomial> monomials(int generators, int k);

/// Derivation of the exterior algebra, determined by its values on generators
/// and extended by the graded Leibniz rule. An odd derivation (the default,
/// e.g. a differential) picks up the Koszul sign when passing a generator; an
/// even one (e.g. a linear map acting on 1-forms) does not.
class Derivation
{
public:
  explicit Derivation(std::vector<Form> on_generators, bool odd = true);

  int generators() const { return static_cast<int>(m_images.size()); }
  const Form& on_generator(int i) const { return m_images.at(i); }

  Form apply(Monomial m) const;
  Form apply(const Form& f) const;

  /// Matrix of the map from span(source) to span(target); target monomials
  /// outside the list must not occur (throws std::logic_error).
  RationalMatrix matrix(const std::vector<Monomial>& source, const std::vector<Monomial>& target) const;

private:
  std::vector<Form> m_images;
  bool m_odd;
};

} // namespace almab::exterior

#endif
