#include "almab/cohomology.hpp"

#include <bit>

namespace almab {

using exterior::Form;
using exterior::Monomial;

const char* to_string(TableSource source)
{
  return source == TableSource::oracle ? "oracle" : "closed-form";
}

Count CohomologyTable::b(int k) const
{
  if (k < 0 || k >= static_cast<int>(betti.size()))
    return 0;
  return betti[k];
}

Count CohomologyTable::h(int p, int q) const
{
  if (p < 0 || q < 0 || p >= static_cast<int>(hodge.size()) || q >= static_cast<int>(hodge[p].size()))
    return 0;
  return hodge[p][q];
}

ModuleTriple module_triple(const ComplexModel& model)
{
  ModuleTriple t;
  for (auto [i, m] : model.jordan().multiplicities())
    t.a_star.add(i, m);
  const auto q = model.q().multiplicities();
  auto qi = [&](int i) -> Count {
    auto it = q.find(i);
    return it == q.end() ? 0 : it->second;
  };
  for (auto [i, m] : q)
    t.b01.add(i, m);
  const int j = model.j();
  for (auto [i, m] : q)
    if (i != j && i != j - 1)
      t.g10.add(i, m);
  t.g10.add(j, qi(j) + 1);
  if (j > 1)
    t.g10.add(j - 1, qi(j - 1) - 1);
  return t;
}

std::vector<Count> betti_closed(const ComplexModel& model)
{
  const Sl2Module a_star = module_triple(model).a_star;
  const int top = model.dim();
  std::vector<Count> b(top + 1);
  for (int k = 0; k <= top; ++k)
    b[k] = delta(wedge(a_star, k)) + (k > 0 ? delta(wedge(a_star, k - 1)) : 0);
  return b;
}

std::vector<std::vector<Count>> hodge_closed(const ComplexModel& model)
{
  const auto t = module_triple(model);
  const int top = model.n() + 1;
  std::vector<std::vector<Count>> h(top + 1, std::vector<Count>(top + 1));
  for (int p = 0; p <= top; ++p) {
    const Sl2Module holo = wedge(t.g10, p);
    for (int q = 0; q <= top; ++q) {
      h[p][q] = delta(tensor(wedge(t.b01, q), holo));
      if (q > 0)
        h[p][q] += delta(tensor(wedge(t.b01, q - 1), holo));
    }
  }
  return h;
}

CohomologyTable closed_form_table(const ComplexModel& model)
{
  return {model.n(), betti_closed(model), hodge_closed(model), TableSource::closed_form};
}

namespace {

bool squares_to_zero(const exterior::Derivation& d, int generators)
{
  for (int k = 0; k + 2 <= generators; ++k)
    for (Monomial m : exterior::monomials(generators, k))
      if (!d.apply(d.apply(m)).empty())
        return false;
  return true;
}

} // namespace

bool ce_d_squared_vanishes(const AlgebraModel& alg)
{
  return squares_to_zero(alg.ce_differential(), alg.dim());
}

std::vector<Count> betti_oracle(const AlgebraModel& alg)
{
  const int dim = alg.dim();
  const auto d = alg.ce_differential();
  if (!squares_to_zero(d, dim))
    throw ConstructionError("Chevalley-Eilenberg differential does not square to zero");
  // ranks[k] = rank of d: Lambda^k -> Lambda^{k+1}
  std::vector<Count> ranks(dim + 1, 0);
  for (int k = 0; k < dim; ++k)
    ranks[k] = static_cast<Count>(rank(d.matrix(exterior::monomials(dim, k), exterior::monomials(dim, k + 1))));
  std::vector<Count> b(dim + 1);
  for (int k = 0; k <= dim; ++k)
    b[k] = binomial(dim, k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return b;
}

namespace {

// Exterior algebra on alpha, beta... (indices 0..n) and their conjugates
// (indices n+1..2n+1), with d from the structure equations.
struct DolbeaultComplex
{
  int holo = 0; // n+1
  Monomial holo_mask = 0;
  exterior::Derivation d{{}};
  exterior::Derivation del{{}};
  exterior::Derivation dbar{{}};
  bool d_splits = true;

  std::pair<int, int> bidegree(Monomial m) const
  {
    return {std::popcount(m & holo_mask), std::popcount(m & ~holo_mask)};
  }
};

DolbeaultComplex dolbeault_complex(const ComplexModel& model)
{
  const auto eq = structure_equations(model);
  DolbeaultComplex c;
  c.holo = static_cast<int>(eq.generators.size());
  c.holo_mask = exterior::generator(c.holo) - 1;
  const int total = 2 * c.holo;
  std::vector<Form> d(total), del(total), dbar(total);
  auto index = [&](const FormFactor& f, bool flip) { return f.generator + ((f.conjugate != flip) ? c.holo : 0); };
  for (int g = 0; g < c.holo; ++g)
    for (bool flip : {false, true}) {
      Form& image = d[g + (flip ? c.holo : 0)];
      for (const auto& term : eq.differentials[g]) {
        Form a{{exterior::generator(index(term.first, flip)), 1}};
        Form b{{exterior::generator(index(term.second, flip)), 1}};
        for (auto [m, coef] : exterior::wedge(a, b))
          exterior::add_term(image, m, term.coef * coef);
      }
    }
  for (int g = 0; g < total; ++g) {
    const bool is_holo = g < c.holo;
    for (auto [m, coef] : d[g]) {
      auto [p, q] = c.bidegree(m);
      if (p == 1 && q == 1)
        exterior::add_term(is_holo ? dbar[g] : del[g], m, coef);
      else if (p == 2 && is_holo)
        exterior::add_term(del[g], m, coef);
      else if (q == 2 && !is_holo)
        exterior::add_term(dbar[g], m, coef);
      else
        c.d_splits = false;
    }
  }
  c.d = exterior::Derivation(std::move(d));
  c.del = exterior::Derivation(std::move(del));
  c.dbar = exterior::Derivation(std::move(dbar));
  return c;
}

} // namespace

DolbeaultChecks dolbeault_checks(const ComplexModel& model)
{
  const auto c = dolbeault_complex(model);
  DolbeaultChecks out;
  out.d_splits = c.d_splits;
  out.d_squared_zero = squares_to_zero(c.d, 2 * c.holo);
  out.dbar_squared_zero = squares_to_zero(c.dbar, 2 * c.holo);
  // d = del + dbar on every monomial
  for (int k = 0; k < 2 * c.holo && out.d_splits; ++k)
    for (Monomial m : exterior::monomials(2 * c.holo, k)) {
      Form sum = c.del.apply(m);
      for (auto [m2, coef] : c.dbar.apply(m))
        exterior::add_term(sum, m2, coef);
      if (sum != c.d.apply(m)) {
        out.d_splits = false;
        break;
      }
    }
  return out;
}

std::vector<std::vector<Count>> hodge_oracle(const ComplexModel& model)
{
  const auto checks = dolbeault_checks(model);
  if (!checks.all())
    throw ConstructionError("Dolbeault complex is inconsistent for " + model.to_string());
  const auto c = dolbeault_complex(model);
  const int top = c.holo;
  const int total = 2 * top;

  // basis[p][q]: monomials of bidegree (p,q)
  std::vector<std::vector<std::vector<Monomial>>> basis(top + 1, std::vector<std::vector<Monomial>>(top + 2));
  for (int k = 0; k <= total; ++k)
    for (Monomial m : exterior::monomials(total, k)) {
      auto [p, q] = c.bidegree(m);
      basis[p][q].push_back(m);
    }

  std::vector<std::vector<Count>> h(top + 1, std::vector<Count>(top + 1));
  for (int p = 0; p <= top; ++p) {
    // ranks[q] = rank of dbar: (p,q) -> (p,q+1)
    std::vector<Count> ranks(top + 1, 0);
    for (int q = 0; q < top; ++q)
      ranks[q] = static_cast<Count>(rank(c.dbar.matrix(basis[p][q], basis[p][q + 1])));
    for (int q = 0; q <= top; ++q)
      h[p][q] = static_cast<Count>(basis[p][q].size()) - ranks[q] - (q > 0 ? ranks[q - 1] : 0);
  }
  return h;
}

CohomologyTable oracle_table(const ComplexModel& model)
{
  return {model.n(), betti_oracle(build_algebra(model)), hodge_oracle(model), TableSource::oracle};
}

std::pair<std::size_t, std::size_t> jordan_block_module_cohomology(int i)
{
  if (i < 1)
    throw std::invalid_argument("jordan_block_module_cohomology: i must be positive");
  RationalMatrix block(i, i);
  for (int t = 0; t + 1 < i; ++t)
    block(t + 1, t) = 1;
  const std::size_t rk = rank(block);
  return {static_cast<std::size_t>(i) - rk, static_cast<std::size_t>(i) - rk};
}

std::vector<Count> betti_hochschild_serre(const AlgebraModel& alg)
{
  const auto& a = alg.adjoint();
  const int size = static_cast<int>(a.rows());
  // dual action on a*: e^k -> sum_l A[k][l] e^l, extended as an even derivation
  std::vector<Form> images(size);
  for (int k = 0; k < size; ++k)
    for (int l = 0; l < size; ++l)
      if (sgn(a(k, l)) != 0)
        exterior::add_term(images[k], exterior::generator(l), a(k, l).get_num().get_si());
  const exterior::Derivation action(std::move(images), false);
  std::vector<Count> ranks(size + 1);
  for (int k = 0; k <= size; ++k) {
    auto mon = exterior::monomials(size, k);
    ranks[k] = static_cast<Count>(rank(action.matrix(mon, mon)));
  }
  std::vector<Count> b(size + 2);
  for (int k = 0; k <= size + 1; ++k) {
    Count h0 = k <= size ? binomial(size, k) - ranks[k] : 0;
    Count h1 = k >= 1 ? binomial(size, k - 1) - ranks[k - 1] : 0;
    b[k] = h0 + h1;
  }
  return b;
}

bool frolicher_holds(const CohomologyTable& table)
{
  const int top = 2 * table.n + 2;
  if (static_cast<int>(table.betti.size()) != top + 1)
    return false;
  for (int k = 0; k <= top; ++k) {
    Count sum = 0;
    for (int p = 0; p <= k; ++p)
      sum += table.h(p, k - p);
    if (sum != table.b(k))
      return false;
  }
  return true;
}

bool verify_frolicher(const ComplexModel& model)
{
  return frolicher_holds(closed_form_table(model));
}

bool SymmetryReport::dichotomy() const
{
  if (epsilon == 0)
    return hodge_symmetric && odd_betti_even;
  return b1_odd && !hodge_symmetric;
}

SymmetryReport symmetry_report(const CohomologyTable& table, int epsilon)
{
  SymmetryReport r;
  r.epsilon = epsilon;
  const int n = table.n;
  const int top = 2 * n + 2;
  r.hodge_symmetric = true;
  r.serre = true;
  for (int p = 0; p <= n + 1; ++p)
    for (int q = 0; q <= n + 1; ++q) {
      if (table.h(p, q) != table.h(q, p))
        r.hodge_symmetric = false;
      if (table.h(p, q) != table.h(n + 1 - p, n + 1 - q))
        r.serre = false;
    }
  r.odd_betti_even = true;
  r.poincare = true;
  for (int k = 0; k <= top; ++k) {
    if (k % 2 == 1 && table.b(k) % 2 != 0)
      r.odd_betti_even = false;
    if (table.b(k) != table.b(top - k))
      r.poincare = false;
  }
  r.b1_odd = table.b(1) % 2 != 0;
  return r;
}

SymmetryReport verify_symmetry(const ComplexModel& model)
{
  return symmetry_report(closed_form_table(model), model.epsilon());
}

} // namespace almab
