#ifndef ALMAB_MODEL_HPP
#define ALMAB_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "almab/exactla.hpp"
#include "almab/exterior.hpp"
#include "almab/partitions.hpp"

namespace almab {

/// Input that does not describe an almost abelian Lie algebra with complex structure.
class InvalidModel : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed on a constructed object.
class ConstructionError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Jordan type of ad(e_0) on the abelian ideal (a partition of 2n+1) for the
/// complex Jordan type q (a partition of n) and overlapping block size j.
/// Throws InvalidModel unless j == 1 or q has a part equal to j-1.
Partition jordan_partition(const Partition& q, int j);

/// The pair (q, j): a nilpotent almost abelian Lie algebra of dimension 2n+2
/// with a complex structure, which is unique up to isomorphism.
class ComplexModel
{
public:
  /// Throws InvalidModel for an empty q, an inadmissible j, or the abelian
  /// case (q all ones, j = 1).
  static ComplexModel make(Partition q, int j);

  int n() const { return m_q.sum(); }
  int dim() const { return 2 * n() + 2; }
  const Partition& q() const { return m_q; }
  int j() const { return m_j; }
  int epsilon() const { return m_j > 1 ? 1 : 0; }
  const Partition& jordan() const { return m_jordan; }

  /// Jordan block sizes of B in basis order: the block of size j-1 first when
  /// j > 1, the remaining blocks weakly decreasing.
  std::vector<int> block_order() const;

  /// "q=[2,1] j=3"
  std::string to_string() const;

  bool operator==(const ComplexModel& other) const { return m_q == other.m_q && m_j == other.m_j; }

private:
  ComplexModel(Partition q, int j, Partition jordan)
    : m_q(std::move(q)), m_j(j), m_jordan(std::move(jordan))
  {
  }

  Partition m_q;
  int m_j = 1;
  Partition m_jordan;
};

/// Some (q, j) realising m, or nullopt if the almost abelian algebra with
/// Jordan type m admits no complex structure. Ties go to the smallest j, then
/// the lexicographically largest q.
std::optional<std::pair<Partition, int>> admits_complex_structure(const Partition& m);

/// All models of dimension 2n+2, q in partitions_of order, j ascending.
/// Throws ConstructionError if two models share a Jordan type.
std::vector<ComplexModel> enumerate_models(int n);

/// Real Lie algebra g = R e_0 + a with a = <e_1, ..., e_{dim-1}> abelian and
/// ad(e_0)|a given by A, together with an almost complex structure J.
class AlgebraModel
{
public:
  /// Throws std::invalid_argument unless A is (dim-1)x(dim-1) with integer
  /// entries and J is dim x dim.
  AlgebraModel(RationalMatrix adjoint, RationalMatrix complex_structure);

  int dim() const { return m_dim; }
  const RationalMatrix& adjoint() const { return m_adjoint; }
  const RationalMatrix& complex_structure() const { return m_j; }

  /// c^k_{ab} in [e_a, e_b] = sum_k c^k_{ab} e_k.
  long long structure_constant(int a, int b, int k) const { return m_structure[(a * m_dim + b) * m_dim + k]; }

  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  /// Matrix of ad(e_a) on g.
  RationalMatrix ad(int a) const;

  /// Chevalley-Eilenberg differential on the dual basis:
  /// d e^k = - sum_{a<b} c^k_{ab} e^a ^ e^b.
  exterior::Derivation ce_differential() const;

  AlgebraModel with_complex_structure(RationalMatrix j) const { return {m_adjoint, std::move(j)}; }

private:
  int m_dim;
  RationalMatrix m_adjoint;
  RationalMatrix m_j;
  std::vector<long long> m_structure;
};

/// Canonical model: A = (0 ; v, B+B) with v = epsilon e_1 and J = J_0.
AlgebraModel build_algebra(const ComplexModel& model);

/// Same, with the Jordan blocks of B in the given order. The order must be a
/// permutation of q's parts and, when j > 1, start with j-1.
AlgebraModel build_algebra(const ComplexModel& model, const std::vector<int>& block_order);

/// N(x,y) = [Jx,Jy] - [x,y] - J[Jx,y] - J[x,Jy] vanishes on all basis pairs.
bool nijenhuis_vanishes(const AlgebraModel& alg);

bool is_complex_structure(const RationalMatrix& j);

/// max(j, largest part of q).
int nilpotency_step(const ComplexModel& model);

/// Smallest s with A^s = 0.
int nilpotency_index(const AlgebraModel& alg);

/// Dimension of [g, g].
std::size_t commutator_dim(const AlgebraModel& alg);

/// Ascending central series term z^k (z^0 = 0).
Subspace upper_central(const AlgebraModel& alg, int k);

/// Descending central series term C^k (C^0 = g).
Subspace lower_central(const AlgebraModel& alg, int k);

struct FiltrationTerm
{
  std::string label;
  Subspace space;
  std::optional<std::vector<std::size_t>> coordinates;
};

/// 0 = z^0 < ... < z^{j-1} < z^{j-1} + C^{nu-j} < ... < z^{j-1} + C^1 < g,
/// with every term checked to be nested, J-invariant and with central steps.
/// Throws ConstructionError if a check fails.
std::vector<FiltrationTerm> stable_series(const AlgebraModel& alg, const ComplexModel& model);

// Structure equations of the (1,0)-forms.

struct FormFactor
{
  int generator = 0;
  bool conjugate = false;
  bool operator==(const FormFactor&) const = default;
};

/// coef * first ^ second
struct EquationTerm
{
  long long coef = 0;
  FormFactor first;
  FormFactor second;
  bool operator==(const EquationTerm&) const = default;
};

struct FormGenerator
{
  std::string label; ///< "alpha" or "beta^l_i"
  int block = -1;    ///< l, or -1 for alpha
  int index = 0;     ///< i, or 0 for alpha
  bool operator==(const FormGenerator&) const = default;
};

struct StructureEquations
{
  std::vector<FormGenerator> generators;
  /// d of each generator, same order as generators.
  std::vector<std::vector<EquationTerm>> differentials;

  /// "alpha", or "bar(alpha)" for a conjugate factor.
  std::string factor_name(const FormFactor& f) const;
  bool operator==(const StructureEquations&) const = default;
};

/// Basis alpha, beta^l_i of the (1,0)-forms with
/// d alpha = 0, d beta^l_1 = 0 (l > 0), d beta^0_1 = alpha ^ bar(alpha),
/// d beta^l_i = (alpha + bar(alpha)) ^ beta^l_{i-1}.
StructureEquations structure_equations(const ComplexModel& model);

/// Checks the structure equations against the real algebra through the
/// explicit complex change of basis: each generator is a (1,0)-form for J,
/// together with their conjugates they span the complexified dual, and
/// their exterior derivatives match the Chevalley-Eilenberg differential.
bool structure_equations_match_algebra(const ComplexModel& model, const AlgebraModel& alg);

} // namespace almab

#endif
