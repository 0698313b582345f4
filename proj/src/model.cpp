#include "almab/model.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace almab {

Partition jordan_partition(const Partition& q, int j)
{
  if (q.empty())
    throw InvalidModel("q must be a partition of a positive integer");
  if (j < 1)
    throw InvalidModel("overlapping block size j must be positive, got " + std::to_string(j));
  std::map<int, int> mult;
  for (auto [i, count] : q.multiplicities())
    mult[i] = 2 * count;
  if (j == 1) {
    mult[1] += 1;
  } else {
    if (q.multiplicity(j - 1) == 0)
      throw InvalidModel("invalid overlapping block size j=" + std::to_string(j) + ": q_" + std::to_string(j - 1) +
                         " = 0");
    mult[j] += 1;
    mult[j - 1] -= 1;
  }
  return Partition::from_multiplicities(mult);
}

ComplexModel ComplexModel::make(Partition q, int j)
{
  Partition m = jordan_partition(q, j);
  if (m.largest() == 1)
    throw InvalidModel("q=[" + q.to_string() + "] with j=1 gives the abelian Lie algebra");
  return ComplexModel(std::move(q), j, std::move(m));
}

std::vector<int> ComplexModel::block_order() const
{
  std::vector<int> blocks = m_q.parts();
  if (m_j > 1) {
    auto it = std::find(blocks.begin(), blocks.end(), m_j - 1);
    blocks.erase(it);
    blocks.insert(blocks.begin(), m_j - 1);
  }
  return blocks;
}

std::string ComplexModel::to_string() const
{
  return "q=[" + m_q.to_string() + "] j=" + std::to_string(m_j);
}

std::optional<std::pair<Partition, int>> admits_complex_structure(const Partition& m)
{
  if (m.sum() % 2 == 0)
    throw std::invalid_argument("admits_complex_structure: partition of an even number");
  const int n = (m.sum() - 1) / 2;
  if (n == 0)
    return std::nullopt;
  const auto candidates = partitions_of(n);
  for (int j = 1; j <= n + 1; ++j)
    for (const auto& q : candidates) {
      if (j > 1 && q.multiplicity(j - 1) == 0)
        continue;
      if (jordan_partition(q, j) == m && m.largest() > 1)
        return std::make_pair(q, j);
    }
  return std::nullopt;
}

std::vector<ComplexModel> enumerate_models(int n)
{
  if (n < 1)
    throw std::invalid_argument("enumerate_models: n must be positive");
  std::vector<ComplexModel> models;
  std::set<Partition> seen;
  for (const auto& q : partitions_of(n)) {
    std::set<int> overlaps{1};
    for (int p : q.parts())
      overlaps.insert(p + 1);
    for (int j : overlaps) {
      if (j == 1 && q.largest() == 1)
        continue;
      auto model = ComplexModel::make(q, j);
      if (!seen.insert(model.jordan()).second)
        throw ConstructionError("two models share the Jordan type [" + model.jordan().to_string() + "]");
      models.push_back(std::move(model));
    }
  }
  return models;
}

AlgebraModel::AlgebraModel(RationalMatrix adjoint, RationalMatrix complex_structure)
  : m_dim(static_cast<int>(adjoint.rows()) + 1), m_adjoint(std::move(adjoint)), m_j(std::move(complex_structure))
{
  if (m_adjoint.rows() != m_adjoint.cols())
    throw std::invalid_argument("adjoint matrix must be square");
  if (m_j.rows() != static_cast<std::size_t>(m_dim) || m_j.cols() != static_cast<std::size_t>(m_dim))
    throw std::invalid_argument("complex structure has the wrong size");
  m_structure.assign(static_cast<std::size_t>(m_dim) * m_dim * m_dim, 0);
  for (int col = 1; col < m_dim; ++col)
    for (int row = 1; row < m_dim; ++row) {
      const Rational& x = m_adjoint(row - 1, col - 1);
      if (sgn(x) == 0)
        continue;
      if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw std::invalid_argument("adjoint matrix must have small integer entries");
      long c = x.get_num().get_si();
      m_structure[(0 * m_dim + col) * m_dim + row] = c;
      m_structure[(col * m_dim + 0) * m_dim + row] = -c;
    }
}

std::vector<Rational> AlgebraModel::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const
{
  std::vector<Rational> out(m_dim);
  for (int a = 0; a < m_dim; ++a) {
    if (sgn(x[a]) == 0)
      continue;
    for (int b = 0; b < m_dim; ++b) {
      if (sgn(y[b]) == 0)
        continue;
      Rational xy = x[a] * y[b];
      for (int k = 0; k < m_dim; ++k)
        if (long long c = structure_constant(a, b, k))
          out[k] += xy * static_cast<long>(c);
    }
  }
  return out;
}

RationalMatrix AlgebraModel::ad(int a) const
{
  RationalMatrix m(m_dim, m_dim);
  for (int b = 0; b < m_dim; ++b)
    for (int k = 0; k < m_dim; ++k)
      m(k, b) = static_cast<long>(structure_constant(a, b, k));
  return m;
}

exterior::Derivation AlgebraModel::ce_differential() const
{
  std::vector<exterior::Form> images(m_dim);
  for (int k = 0; k < m_dim; ++k)
    for (int a = 0; a < m_dim; ++a)
      for (int b = a + 1; b < m_dim; ++b)
        if (long long c = structure_constant(a, b, k))
          exterior::add_term(images[k], exterior::generator(a) | exterior::generator(b), -c);
  return exterior::Derivation(std::move(images));
}

AlgebraModel build_algebra(const ComplexModel& model)
{
  return build_algebra(model, model.block_order());
}

AlgebraModel build_algebra(const ComplexModel& model, const std::vector<int>& block_order)
{
  std::vector<int> sorted = block_order;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted != model.q().parts())
    throw InvalidModel("block order is not a permutation of q");
  if (model.j() > 1 && block_order.front() != model.j() - 1)
    throw InvalidModel("block order must start with the block of size j-1");

  const int n = model.n();
  const int size = 2 * n + 1;
  RationalMatrix a(size, size);
  // index 0 of a is e_1; first copy of B at 1..n, second copy at n+1..2n
  if (model.epsilon() == 1)
    a(1, 0) = 1;
  int start = 0;
  for (int block : block_order) {
    for (int t = 0; t + 1 < block; ++t) {
      a(1 + start + t + 1, 1 + start + t) = 1;
      a(1 + n + start + t + 1, 1 + n + start + t) = 1;
    }
    start += block;
  }

  RationalMatrix j(size + 1, size + 1);
  j(1, 0) = 1;
  j(0, 1) = -1;
  for (int p = 0; p < n; ++p) {
    j(2 + n + p, 2 + p) = 1;
    j(2 + p, 2 + n + p) = -1;
  }
  return AlgebraModel(std::move(a), std::move(j));
}

bool is_complex_structure(const RationalMatrix& j)
{
  return j.rows() == j.cols() && j * j == -RationalMatrix::identity(j.rows());
}

namespace {

std::vector<Rational> unit(int dim, int i)
{
  std::vector<Rational> v(dim);
  v[i] = 1;
  return v;
}

std::vector<Rational> column(const RationalMatrix& m, int c)
{
  std::vector<Rational> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    v[r] = m(r, c);
  return v;
}

} // namespace

bool nijenhuis_vanishes(const AlgebraModel& alg)
{
  const int dim = alg.dim();
  const auto& j = alg.complex_structure();
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      auto x = unit(dim, a);
      auto y = unit(dim, b);
      auto jx = column(j, a);
      auto jy = column(j, b);
      auto t1 = alg.bracket(jx, jy);
      auto t2 = alg.bracket(x, y);
      auto t3 = almab::apply(j, alg.bracket(jx, y));
      auto t4 = almab::apply(j, alg.bracket(x, jy));
      for (int k = 0; k < dim; ++k)
        if (sgn(t1[k] - t2[k] - t3[k] - t4[k]) != 0)
          return false;
    }
  return true;
}

int nilpotency_step(const ComplexModel& model)
{
  return std::max(model.j(), model.q().largest());
}

int nilpotency_index(const AlgebraModel& alg)
{
  return static_cast<int>(power_ranks(alg.adjoint()).size());
}

Subspace lower_central(const AlgebraModel& alg, int k)
{
  const int dim = alg.dim();
  Subspace current = Subspace::whole(dim);
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Rational>> images;
    for (int a = 0; a < dim; ++a)
      for (const auto& v : current.basis())
        images.push_back(alg.bracket(unit(dim, a), v));
    current = Subspace::span(dim, images);
  }
  return current;
}

Subspace upper_central(const AlgebraModel& alg, int k)
{
  const int dim = alg.dim();
  Subspace current(dim);
  for (int step = 0; step < k; ++step) {
    // x in z^{k+1} iff P ad(e_a) x = 0 for all a, where ker P = z^k
    RationalMatrix p = current.annihilator();
    RationalMatrix stacked(p.rows() * dim, dim);
    for (int a = 0; a < dim; ++a) {
      RationalMatrix block = p * alg.ad(a);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (int c = 0; c < dim; ++c)
          stacked(a * p.rows() + r, c) = block(r, c);
    }
    current = Subspace::span(dim, nullspace(stacked));
  }
  return current;
}

std::size_t commutator_dim(const AlgebraModel& alg)
{
  return lower_central(alg, 1).dim();
}

std::vector<FiltrationTerm> stable_series(const AlgebraModel& alg, const ComplexModel& model)
{
  const int dim = alg.dim();
  const int j = model.j();
  const int nu = nilpotency_index(alg);
  std::vector<FiltrationTerm> terms;
  auto push = [&](std::string label, Subspace s) {
    auto coords = s.coordinate_indices();
    terms.push_back({std::move(label), std::move(s), std::move(coords)});
  };
  for (int k = 0; k < j; ++k)
    push("z^" + std::to_string(k), upper_central(alg, k));
  const Subspace top_center = terms.back().space;
  for (int k = nu - j; k >= 1; --k)
    push("z^" + std::to_string(j - 1) + "+C^" + std::to_string(k), top_center + lower_central(alg, k));
  push("g", Subspace::whole(dim));

  const auto& jm = alg.complex_structure();
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& space = terms[t].space;
    for (const auto& v : space.basis())
      if (!space.contains(almab::apply(jm, v)))
        throw ConstructionError("filtration term " + terms[t].label + " is not J-invariant for " + model.to_string());
    if (t == 0)
      continue;
    const auto& below = terms[t - 1].space;
    if (!space.contains(below))
      throw ConstructionError("filtration is not nested at " + terms[t].label + " for " + model.to_string());
    for (int a = 0; a < dim; ++a)
      for (const auto& v : space.basis())
        if (!below.contains(alg.bracket(unit(dim, a), v)))
          throw ConstructionError("step " + terms[t - 1].label + " < " + terms[t].label + " is not central for " +
                                  model.to_string());
  }
  return terms;
}

std::string StructureEquations::factor_name(const FormFactor& f) const
{
  const std::string& name = generators.at(f.generator).label;
  return f.conjugate ? "bar(" + name + ")" : name;
}

StructureEquations structure_equations(const ComplexModel& model)
{
  StructureEquations eq;
  eq.generators.push_back({"alpha", -1, 0});
  eq.differentials.emplace_back();
  const FormFactor alpha{0, false};
  const FormFactor alpha_bar{0, true};

  int label = model.epsilon() == 1 ? 0 : 1;
  for (int block : model.block_order()) {
    for (int i = 1; i <= block; ++i) {
      int g = static_cast<int>(eq.generators.size());
      eq.generators.push_back({"beta^" + std::to_string(label) + "_" + std::to_string(i), label, i});
      std::vector<EquationTerm> d;
      if (i > 1) {
        d.push_back({1, alpha, {g - 1, false}});
        d.push_back({1, alpha_bar, {g - 1, false}});
      } else if (label == 0) {
        d.push_back({1, alpha, alpha_bar});
      }
      eq.differentials.push_back(std::move(d));
    }
    ++label;
  }
  return eq;
}

namespace {

struct Gaussian
{
  Rational re;
  Rational im;

  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gaussian conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

using OneForm = std::vector<Gaussian>;
using TwoForm = std::map<std::pair<int, int>, Gaussian>;

TwoForm wedge_one_forms(const OneForm& u, const OneForm& v)
{
  TwoForm out;
  const int dim = static_cast<int>(u.size());
  for (int s = 0; s < dim; ++s)
    for (int t = s + 1; t < dim; ++t) {
      Gaussian c = u[s] * v[t] - u[t] * v[s];
      if (!c.is_zero())
        out[{s, t}] = c;
    }
  return out;
}

void accumulate(TwoForm& into, const TwoForm& f, const Gaussian& scale)
{
  for (const auto& [key, c] : f)
    into[key] = into[key] + scale * c;
}

bool same(const TwoForm& a, const TwoForm& b)
{
  auto nonzero = [](const TwoForm& f) {
    TwoForm out;
    for (const auto& [k, c] : f)
      if (!c.is_zero())
        out[k] = c;
    return out;
  };
  auto x = nonzero(a);
  auto y = nonzero(b);
  if (x.size() != y.size())
    return false;
  for (const auto& [k, c] : x) {
    auto it = y.find(k);
    if (it == y.end() || !(it->second - c).is_zero())
      return false;
  }
  return true;
}

} // namespace

bool structure_equations_match_algebra(const ComplexModel& model, const AlgebraModel& alg)
{
  const int n = model.n();
  const int dim = alg.dim();
  if (dim != 2 * n + 2)
    return false;
  const auto eq = structure_equations(model);
  const int gens = static_cast<int>(eq.generators.size());
  if (gens != n + 1)
    return false;

  // generators in the real dual basis e^0, ..., e^{2n+1}
  std::vector<OneForm> forms(gens, OneForm(dim));
  if (model.epsilon() == 0) {
    forms[0][0] = {Rational(-1, 2), 0};
    forms[0][1] = {0, Rational(-1, 2)};
  } else {
    forms[0][0] = {1, 0};
    forms[0][1] = {0, 1};
  }
  for (int g = 1; g < gens; ++g) {
    const auto& gen = eq.generators[g];
    // beta^l_i = s * (e^k + i e^{k+n}); the scale s absorbs d(e^k + i e^{k+n}) = -1/2 (alpha + bar alpha) ^ ...
    Gaussian scale{1, 0};
    if (model.epsilon() == 1) {
      Integer power = 1;
      for (int t = 1; t < gen.index; ++t)
        power *= -2;
      scale = {Rational(power), 0};
      if (gen.block == 0)
        scale = scale * Gaussian{0, 2};
    }
    const int k = 1 + g; // first copy e_2 .. e_{n+1}
    forms[g][k] = scale;
    forms[g][k + n] = scale * Gaussian{0, 1};
  }

  // (1,0)-type: gamma(J x) = i gamma(x)
  const auto& jm = alg.complex_structure();
  for (const auto& f : forms)
    for (int c = 0; c < dim; ++c) {
      Gaussian lhs{0, 0};
      for (int l = 0; l < dim; ++l)
        if (sgn(jm(l, c)) != 0)
          lhs = lhs + f[l] * Gaussian{jm(l, c), 0};
      if (!(lhs - Gaussian{0, 1} * f[c]).is_zero())
        return false;
    }

  // generators and conjugates form a basis: real and imaginary parts span R^dim
  RationalMatrix parts(2 * gens, dim);
  for (int g = 0; g < gens; ++g)
    for (int c = 0; c < dim; ++c) {
      parts(2 * g, c) = forms[g][c].re;
      parts(2 * g + 1, c) = forms[g][c].im;
    }
  if (rank(parts) != static_cast<std::size_t>(dim))
    return false;

  const auto d = alg.ce_differential();
  auto factor_form = [&](const FormFactor& f) {
    OneForm out = forms[f.generator];
    if (f.conjugate)
      for (auto& c : out)
        c = c.conj();
    return out;
  };
  for (int g = 0; g < gens; ++g) {
    TwoForm lhs;
    for (int k = 0; k < dim; ++k) {
      if (forms[g][k].is_zero())
        continue;
      for (auto [mono, coef] : d.on_generator(k)) {
        int s = std::countr_zero(mono);
        int t = 31 - std::countl_zero(mono);
        lhs[{s, t}] = lhs[{s, t}] + forms[g][k] * Gaussian{Rational(static_cast<long>(coef)), 0};
      }
    }
    TwoForm rhs;
    for (const auto& term : eq.differentials[g])
      accumulate(rhs, wedge_one_forms(factor_form(term.first), factor_form(term.second)),
                 Gaussian{Rational(static_cast<long>(term.coef)), 0});
    if (!same(lhs, rhs))
      return false;
  }
  return true;
}

} // namespace almab
