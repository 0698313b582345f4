#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "almab/cohomology.hpp"
#include "almab/model.hpp"

using namespace almab;

namespace {

// Jordan type from multiplicities: 2 q_i blocks of size i, then one block
// moves from size j-1 to size j (a fresh 1-block when j = 1)
Partition jordan_by_hand(const Partition& q, int j)
{
  std::map<int, int> m;
  for (auto [i, c] : q.multiplicities())
    m[i] = 2 * c;
  m[j] += 1;
  if (j > 1)
    m[j - 1] -= 1;
  std::vector<int> out;
  for (auto [i, c] : m)
    for (int k = 0; k < c; ++k)
      out.push_back(i);
  return Partition(out);
}

std::vector<Rational> vec(int dim, int index)
{
  std::vector<Rational> v(dim);
  v[index] = 1;
  return v;
}

// [x, y] computed from A alone: g = R e_0 + a, [e_0, a] = A a
std::vector<Rational> bracket_from_adjoint(const RationalMatrix& a, const std::vector<Rational>& x,
                                           const std::vector<Rational>& y)
{
  const std::size_t size = a.rows();
  std::vector<Rational> out(size + 1);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      out[r + 1] += x[0] * a(r, c) * y[c + 1];
      out[r + 1] -= y[0] * a(r, c) * x[c + 1];
    }
  return out;
}

bool nijenhuis_by_hand(const RationalMatrix& a, const RationalMatrix& j)
{
  const int dim = static_cast<int>(j.rows());
  auto jv = [&](const std::vector<Rational>& v) { return almab::apply(j, v); };
  for (int s = 0; s < dim; ++s)
    for (int t = 0; t < dim; ++t) {
      auto x = vec(dim, s), y = vec(dim, t);
      auto n1 = bracket_from_adjoint(a, jv(x), jv(y));
      auto n2 = bracket_from_adjoint(a, x, y);
      auto n3 = jv(bracket_from_adjoint(a, jv(x), y));
      auto n4 = jv(bracket_from_adjoint(a, x, jv(y)));
      for (int k = 0; k < dim; ++k)
        if (sgn(n1[k] - n2[k] - n3[k] - n4[k]) != 0)
          return false;
    }
  return true;
}

std::vector<ComplexModel> models_up_to(int max_n)
{
  std::vector<ComplexModel> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& m : enumerate_models(n))
      out.push_back(m);
  return out;
}

std::size_t matrix_rank_power(const RationalMatrix& a, int k)
{
  RationalMatrix p = RationalMatrix::identity(a.rows());
  for (int t = 0; t < k; ++t)
    p = p * a;
  return rank_gaussian(p);
}

} // namespace

TEST(JordanPartition, WorkedCases)
{
  EXPECT_EQ(jordan_partition(Partition({1}), 2), Partition({2, 1}));
  EXPECT_EQ(jordan_partition(Partition({2}), 3), Partition({3, 2}));
  EXPECT_EQ(jordan_partition(Partition({2}), 1), Partition({2, 2, 1}));
  EXPECT_EQ(jordan_partition(Partition({1, 1}), 2), Partition({2, 1, 1, 1}));
  EXPECT_EQ(jordan_partition(Partition({2, 1}), 2), Partition({2, 2, 2, 1}));
  EXPECT_EQ(jordan_partition(Partition({2, 1}), 3), Partition({3, 2, 1, 1}));
  EXPECT_EQ(jordan_partition(Partition({3}), 4), Partition({4, 3}));
}

TEST(JordanPartition, MatchesMultiplicityRule)
{
  for (int n = 1; n <= 8; ++n)
    for (const auto& q : partitions_of(n)) {
      std::set<int> js{1};
      for (int p : q.parts())
        js.insert(p + 1);
      for (int j : js)
        EXPECT_EQ(jordan_partition(q, j), jordan_by_hand(q, j)) << q.to_string() << " j=" << j;
    }
}

TEST(JordanPartition, RejectsInadmissibleJ)
{
  try {
    jordan_partition(Partition({2}), 5);
    FAIL() << "expected InvalidModel";
  } catch (const InvalidModel& e) {
    EXPECT_NE(std::string(e.what()).find("q_4 = 0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(jordan_partition(Partition({2}), 2), InvalidModel);
  EXPECT_THROW(jordan_partition(Partition({2}), 0), InvalidModel);
}

TEST(ComplexModel, RejectsAbelianAndEmpty)
{
  EXPECT_THROW(ComplexModel::make(Partition({1, 1}), 1), InvalidModel);
  EXPECT_THROW(ComplexModel::make(Partition({1}), 1), InvalidModel);
  EXPECT_THROW(ComplexModel::make(Partition(), 1), InvalidModel);
  EXPECT_NO_THROW(ComplexModel::make(Partition({1, 1}), 2));
}

TEST(ComplexModel, Accessors)
{
  auto m = ComplexModel::make(Partition({2, 1}), 3);
  EXPECT_EQ(m.n(), 3);
  EXPECT_EQ(m.dim(), 8);
  EXPECT_EQ(m.epsilon(), 1);
  EXPECT_EQ(m.block_order(), (std::vector<int>{2, 1}));
  EXPECT_EQ(m.to_string(), "q=[2,1] j=3");
  EXPECT_EQ(ComplexModel::make(Partition({2, 1}), 2).block_order(), (std::vector<int>{1, 2}));
  EXPECT_EQ(ComplexModel::make(Partition({2, 1}), 1).epsilon(), 0);
}

TEST(Enumerate, SmallDimensions)
{
  auto four = enumerate_models(1);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].jordan(), Partition({2, 1}));

  std::set<Partition> six;
  for (const auto& m : enumerate_models(2))
    six.insert(m.jordan());
  EXPECT_EQ(six, (std::set<Partition>{Partition({2, 2, 1}), Partition({3, 2}), Partition({2, 1, 1, 1})}));
}

TEST(Enumerate, CountsPerPartition)
{
  const std::size_t totals[] = {0, 1, 3, 6, 11, 18, 29};
  for (int n = 1; n <= 6; ++n) {
    auto models = enumerate_models(n);
    EXPECT_EQ(models.size(), totals[n]) << n;
    for (const auto& q : partitions_of(n)) {
      std::set<int> parts(q.parts().begin(), q.parts().end());
      std::size_t expected = parts.size() + 1; // |I| + 1
      if (q.largest() == 1)
        --expected;
      auto count = std::count_if(models.begin(), models.end(), [&](const ComplexModel& m) { return m.q() == q; });
      EXPECT_EQ(static_cast<std::size_t>(count), expected) << q.to_string();
    }
  }
}

TEST(Enumerate, JordanTypesDistinct)
{
  for (int n = 1; n <= 7; ++n) {
    std::set<Partition> seen;
    for (const auto& m : enumerate_models(n))
      EXPECT_TRUE(seen.insert(m.jordan()).second) << m.to_string();
  }
}

TEST(Classify, AgreesWithEnumeratedSet)
{
  for (int n = 1; n <= 6; ++n) {
    std::set<Partition> reachable;
    for (const auto& q : partitions_of(n)) {
      std::set<int> js{1};
      for (int p : q.parts())
        js.insert(p + 1);
      for (int j : js)
        if (!(j == 1 && q.largest() == 1))
          reachable.insert(jordan_by_hand(q, j));
    }
    for (const auto& m : partitions_of(2 * n + 1)) {
      auto witness = admits_complex_structure(m);
      EXPECT_EQ(witness.has_value(), reachable.count(m) == 1) << m.to_string();
      if (witness)
        EXPECT_EQ(jordan_partition(witness->first, witness->second), m);
    }
  }
}

TEST(Classify, Examples)
{
  EXPECT_FALSE(admits_complex_structure(Partition({3})).has_value());
  EXPECT_EQ(admits_complex_structure(Partition({2, 1})), std::make_pair(Partition({1}), 2));
  EXPECT_EQ(admits_complex_structure(Partition({3, 2})), std::make_pair(Partition({2}), 3));
  EXPECT_FALSE(admits_complex_structure(Partition({1, 1, 1})).has_value());
  EXPECT_FALSE(admits_complex_structure(Partition({5})).has_value());
  EXPECT_THROW(admits_complex_structure(Partition({2, 2})), std::invalid_argument);
}

TEST(BuildAlgebra, ComplexStructureSquaresToMinusOne)
{
  for (const auto& model : models_up_to(5)) {
    auto alg = build_algebra(model);
    const auto& j = alg.complex_structure();
    EXPECT_EQ(j * j, -RationalMatrix::identity(model.dim())) << model.to_string();
    EXPECT_TRUE(is_complex_structure(j));
  }
}

TEST(BuildAlgebra, NijenhuisAgreesWithHandBracket)
{
  for (const auto& model : models_up_to(4)) {
    auto alg = build_algebra(model);
    EXPECT_TRUE(nijenhuis_vanishes(alg)) << model.to_string();
    EXPECT_TRUE(nijenhuis_by_hand(alg.adjoint(), alg.complex_structure())) << model.to_string();
  }
}

TEST(BuildAlgebra, BracketMatchesAdjoint)
{
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-3, 3);
  for (const auto& model : models_up_to(3)) {
    auto alg = build_algebra(model);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> x(model.dim()), y(model.dim());
      for (int k = 0; k < model.dim(); ++k) {
        x[k] = val(rng);
        y[k] = val(rng);
      }
      EXPECT_EQ(alg.bracket(x, y), bracket_from_adjoint(alg.adjoint(), x, y));
    }
  }
}

TEST(BuildAlgebra, CorruptedComplexStructureIsDetected)
{
  auto model = ComplexModel::make(Partition({2}), 1);
  auto alg = build_algebra(model);
  const int dim = model.dim();

  // swap e_1 and e_2 in J: still J^2 = -1, but no longer compatible with A
  RationalMatrix p(dim, dim);
  for (int k = 0; k < dim; ++k)
    p(k, k) = 1;
  p(1, 1) = 0;
  p(2, 2) = 0;
  p(1, 2) = 1;
  p(2, 1) = 1;
  auto swapped = p * alg.complex_structure() * p;
  ASSERT_TRUE(is_complex_structure(swapped));
  auto bad = alg.with_complex_structure(swapped);
  EXPECT_FALSE(nijenhuis_vanishes(bad));
  EXPECT_FALSE(nijenhuis_by_hand(bad.adjoint(), swapped));

  auto not_complex = alg.complex_structure();
  not_complex(0, 1) = 2;
  EXPECT_FALSE(is_complex_structure(not_complex));
}

TEST(BuildAlgebra, JordanTypeRecovered)
{
  for (const auto& model : models_up_to(5)) {
    auto alg = build_algebra(model);
    EXPECT_EQ(jordan_type_from_ranks(power_ranks(alg.adjoint()), alg.adjoint().rows()), model.jordan());
  }
}

TEST(BuildAlgebra, NilpotencyStep)
{
  for (const auto& model : models_up_to(5)) {
    auto alg = build_algebra(model);
    EXPECT_EQ(nilpotency_index(alg), nilpotency_step(model));
    EXPECT_EQ(nilpotency_step(model), std::max(model.j(), model.q().largest()));
    EXPECT_EQ(nilpotency_step(model), model.jordan().largest());
  }
}

TEST(BuildAlgebra, BlockOrderDoesNotChangeTheAlgebra)
{
  for (const auto& model : models_up_to(5)) {
    auto order = model.block_order();
    const std::size_t fixed = model.j() > 1 ? 1 : 0;
    if (std::adjacent_find(order.begin() + fixed, order.end(), std::not_equal_to<>()) == order.end())
      continue;
    std::reverse(order.begin() + fixed, order.end());
    auto alg = build_algebra(model, order);
    EXPECT_TRUE(nijenhuis_vanishes(alg)) << model.to_string();
    EXPECT_EQ(jordan_type_from_ranks(power_ranks(alg.adjoint()), alg.adjoint().rows()), model.jordan());
    if (model.dim() <= 10)
      EXPECT_EQ(betti_oracle(alg), betti_closed(model)) << model.to_string();
  }
}

TEST(BuildAlgebra, RejectsBadBlockOrder)
{
  auto model = ComplexModel::make(Partition({2, 1}), 3);
  EXPECT_THROW(build_algebra(model, {1, 2}), std::invalid_argument);
  EXPECT_THROW(build_algebra(model, {2, 2}), std::invalid_argument);
}

TEST(AlgebraModel, RejectsNonIntegerAdjoint)
{
  RationalMatrix a(3, 3);
  a(1, 0) = Rational(1, 2);
  EXPECT_THROW(AlgebraModel(a, RationalMatrix::identity(4)), std::invalid_argument);
  EXPECT_THROW(AlgebraModel(RationalMatrix(3, 3), RationalMatrix::identity(3)), std::invalid_argument);
}

TEST(CentralSeries, CommutatorIsImageOfA)
{
  for (const auto& model : models_up_to(5)) {
    auto alg = build_algebra(model);
    const std::size_t expected = model.jordan().sum() - model.jordan().length();
    EXPECT_EQ(commutator_dim(alg), expected);
    EXPECT_EQ(lower_central(alg, 1).dim(), expected);
    // dim [g,g] = 1 exactly for the Heisenberg-type models
    const bool heisenberg = model.jordan().largest() == 2 && model.jordan().multiplicity(2) == 1;
    EXPECT_EQ(commutator_dim(alg) == 1, heisenberg) << model.to_string();
  }
}

TEST(CentralSeries, TermsFromPowersOfA)
{
  for (const auto& model : models_up_to(4)) {
    auto alg = build_algebra(model);
    const int nu = nilpotency_step(model);
    const std::size_t size = alg.adjoint().rows();
    EXPECT_EQ(lower_central(alg, 0).dim(), static_cast<std::size_t>(model.dim()));
    EXPECT_EQ(upper_central(alg, 0).dim(), 0u);
    for (int k = 1; k <= nu; ++k) {
      EXPECT_EQ(lower_central(alg, k).dim(), matrix_rank_power(alg.adjoint(), k)) << model.to_string() << k;
      const std::size_t z = k < nu ? size - matrix_rank_power(alg.adjoint(), k) : size + 1;
      EXPECT_EQ(upper_central(alg, k).dim(), z) << model.to_string() << k;
    }
    EXPECT_EQ(lower_central(alg, nu).dim(), 0u);
  }
}

TEST(StableSeries, NestedJInvariantCentral)
{
  for (const auto& model : models_up_to(5)) {
    auto alg = build_algebra(model);
    auto terms = stable_series(alg, model);
    ASSERT_GE(terms.size(), 2u);
    EXPECT_EQ(terms.front().space.dim(), 0u);
    EXPECT_EQ(terms.back().space.dim(), static_cast<std::size_t>(model.dim()));
    const auto& j = alg.complex_structure();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& s = terms[t].space;
      for (const auto& v : s.basis())
        EXPECT_TRUE(s.contains(almab::apply(j, v))) << terms[t].label;
      if (t == 0)
        continue;
      EXPECT_TRUE(s.contains(terms[t - 1].space));
      EXPECT_EQ(s.dim() % 2, 0u);
      for (int a = 0; a < model.dim(); ++a)
        for (const auto& v : s.basis())
          EXPECT_TRUE(terms[t - 1].space.contains(alg.bracket(vec(model.dim(), a), v))) << terms[t].label;
    }
  }
}

TEST(StructureEquations, Examples)
{
  auto heis = structure_equations(ComplexModel::make(Partition({1}), 2));
  ASSERT_EQ(heis.generators.size(), 2u);
  EXPECT_EQ(heis.generators[0].label, "alpha");
  EXPECT_EQ(heis.generators[1].label, "beta^0_1");
  EXPECT_TRUE(heis.differentials[0].empty());
  ASSERT_EQ(heis.differentials[1].size(), 1u);
  EXPECT_EQ(heis.differentials[1][0], (EquationTerm{1, {0, false}, {0, true}}));

  auto eq = structure_equations(ComplexModel::make(Partition({2}), 1));
  ASSERT_EQ(eq.generators.size(), 3u);
  EXPECT_EQ(eq.generators[1].label, "beta^1_1");
  EXPECT_EQ(eq.generators[2].label, "beta^1_2");
  EXPECT_TRUE(eq.differentials[1].empty());
  EXPECT_EQ(eq.differentials[2],
            (std::vector<EquationTerm>{{1, {0, false}, {1, false}}, {1, {0, true}, {1, false}}}));
  EXPECT_EQ(eq.factor_name({0, true}), "bar(alpha)");
}

TEST(StructureEquations, MatchTheRealAlgebra)
{
  for (const auto& model : models_up_to(5))
    EXPECT_TRUE(structure_equations_match_algebra(model, build_algebra(model))) << model.to_string();
}

TEST(StructureEquations, MismatchDetected)
{
  // equations of one model against the algebra of another of the same dimension
  auto a = ComplexModel::make(Partition({2}), 1);
  auto b = ComplexModel::make(Partition({2}), 3);
  EXPECT_FALSE(structure_equations_match_algebra(a, build_algebra(b)));
  EXPECT_FALSE(structure_equations_match_algebra(b, build_algebra(a)));
}
