#ifndef ALMAB_COHOMOLOGY_HPP
#define ALMAB_COHOMOLOGY_HPP

#include <utility>
#include <vector>

#include "almab/model.hpp"
#include "almab/sl2rep.hpp"

namespace almab {

enum class TableSource
{
  closed_form,
  oracle,
};

const char* to_string(TableSource source);

/// Betti numbers b_0..b_{2n+2} and Hodge numbers h^{p,q}, 0 <= p,q <= n+1.
struct CohomologyTable
{
  int n = 0;
  std::vector<Count> betti;
  std::vector<std::vector<Count>> hodge; ///< hodge[p][q]
  TableSource source = TableSource::closed_form;

  /// Zero outside the valid range.
  Count b(int k) const;
  Count h(int p, int q) const;

  bool operator==(const CohomologyTable& other) const { return betti == other.betti && hodge == other.hodge; }
};

/// Module structures under the one-dimensional quotient algebras:
/// a* (complexified dual of the abelian ideal), b^{0,1*} and g^{1,0*}.
struct ModuleTriple
{
  Sl2Module a_star;
  Sl2Module b01;
  Sl2Module g10;
};

ModuleTriple module_triple(const ComplexModel& model);

/// b_k = delta(Lambda^k a*) + delta(Lambda^{k-1} a*).
std::vector<Count> betti_closed(const ComplexModel& model);

/// h^{p,q} = delta(Lambda^q b01 (x) Lambda^p g10) + delta(Lambda^{q-1} b01 (x) Lambda^p g10).
std::vector<std::vector<Count>> hodge_closed(const ComplexModel& model);

CohomologyTable closed_form_table(const ComplexModel& model);

/// Betti numbers from exact ranks of the Chevalley-Eilenberg differentials on
/// the monomial basis of Lambda^k g*. Throws ConstructionError if d^2 != 0.
std::vector<Count> betti_oracle(const AlgebraModel& alg);

/// Hodge numbers from exact ranks of dbar on the invariant (p,q)-forms, with
/// d extended from the structure equations and their conjugates. Throws
/// ConstructionError if d^2 != 0, dbar^2 != 0 or d has a component of the
/// wrong bidegree.
std::vector<std::vector<Count>> hodge_oracle(const ComplexModel& model);

CohomologyTable oracle_table(const ComplexModel& model);

/// d^2 = 0 on every monomial of the Chevalley-Eilenberg complex.
bool ce_d_squared_vanishes(const AlgebraModel& alg);

struct DolbeaultChecks
{
  bool d_squared_zero = false;
  bool dbar_squared_zero = false;
  bool d_splits = false; ///< d = del + dbar, no (0,2) or (2,0) leakage
  bool all() const { return d_squared_zero && dbar_squared_zero && d_splits; }
};

DolbeaultChecks dolbeault_checks(const ComplexModel& model);

/// (dim ker, dim coker) of multiplication by the Jordan block J_i on C^i.
std::pair<std::size_t, std::size_t> jordan_block_module_cohomology(int i);

/// b_k = dim H^0(h, Lambda^k a*) + dim H^1(h, Lambda^{k-1} a*), with the
/// invariants and coinvariants of ad(e_0) on Lambda^k a* computed by ranks.
std::vector<Count> betti_hochschild_serre(const AlgebraModel& alg);

/// b_k = sum_{p+q=k} h^{p,q} for every k.
bool frolicher_holds(const CohomologyTable& table);

/// frolicher_holds on the closed-form table.
bool verify_frolicher(const ComplexModel& model);

struct SymmetryReport
{
  int epsilon = 0;
  bool hodge_symmetric = false; ///< h^{p,q} = h^{q,p}
  bool odd_betti_even = false;
  bool b1_odd = false;
  bool poincare = false; ///< b_k = b_{2n+2-k}
  bool serre = false;    ///< h^{p,q} = h^{n+1-p,n+1-q}

  /// epsilon = 0: symmetric grid and even odd Betti numbers;
  /// epsilon = 1: b_1 odd and the grid not symmetric.
  bool dichotomy() const;
  bool passed() const { return dichotomy() && poincare && serre; }
};

SymmetryReport symmetry_report(const CohomologyTable& table, int epsilon);

/// symmetry_report on the closed-form table.
SymmetryReport verify_symmetry(const ComplexModel& model);

} // namespace almab

#endif
