#include "almab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "almab/cohomology.hpp"
#include "almab/partitions.hpp"
#include "almab/sl2rep.hpp"

namespace almab {

bool ModelVerification::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult run_check(std::string name, const std::function<bool(std::string&)>& body)
{
  CheckResult r{std::move(name), false, {}};
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  if (!r.passed && r.detail.empty())
    r.detail = "check returned false";
  return r;
}

std::string show(const std::vector<Count>& v)
{
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

} // namespace

std::vector<CheckResult> verify_model(const ComplexModel& model, bool with_oracle)
{
  std::vector<CheckResult> out;
  const AlgebraModel alg = build_algebra(model);
  const CohomologyTable closed = closed_form_table(model);

  out.push_back(run_check("complex-structure", [&](std::string&) { return is_complex_structure(alg.complex_structure()); }));
  out.push_back(run_check("nijenhuis", [&](std::string&) { return nijenhuis_vanishes(alg); }));
  out.push_back(run_check("jordan-recovery", [&](std::string& why) {
    auto recovered = jordan_type_from_ranks(power_ranks(alg.adjoint()), alg.adjoint().rows());
    why = "recovered [" + recovered.to_string() + "]";
    return recovered == model.jordan();
  }));
  out.push_back(run_check("nilpotency-step", [&](std::string& why) {
    int index = nilpotency_index(alg);
    why = "A^s = 0 first at s=" + std::to_string(index);
    return index == nilpotency_step(model);
  }));
  out.push_back(run_check("stable-series", [&](std::string&) { return !stable_series(alg, model).empty(); }));
  out.push_back(run_check("structure-equations", [&](std::string&) {
    return structure_equations_match_algebra(model, alg);
  }));
  out.push_back(run_check("ce-d-squared", [&](std::string&) { return ce_d_squared_vanishes(alg); }));
  out.push_back(run_check("dolbeault-complex", [&](std::string&) { return dolbeault_checks(model).all(); }));
  out.push_back(run_check("module-dimensions", [&](std::string&) {
    auto t = module_triple(model);
    return t.a_star.dimension() == 2 * model.n() + 1 && t.b01.dimension() == model.n() &&
           t.g10.dimension() == model.n() + 1;
  }));
  out.push_back(run_check("frolicher-closed", [&](std::string&) { return frolicher_holds(closed); }));
  out.push_back(run_check("symmetry-closed", [&](std::string&) {
    return symmetry_report(closed, model.epsilon()).dichotomy();
  }));

  if (with_oracle) {
    std::optional<CohomologyTable> oracle;
    out.push_back(run_check("oracle-betti", [&](std::string& why) {
      oracle = oracle_table(model);
      why = "oracle " + show(oracle->betti) + " closed " + show(closed.betti);
      return oracle->betti == closed.betti;
    }));
    out.push_back(run_check("oracle-hodge", [&](std::string&) { return oracle && oracle->hodge == closed.hodge; }));
    out.push_back(run_check("frolicher-oracle", [&](std::string&) { return oracle && frolicher_holds(*oracle); }));
    out.push_back(run_check("symmetry-oracle", [&](std::string&) {
      return oracle && symmetry_report(*oracle, model.epsilon()).dichotomy();
    }));
    out.push_back(run_check("poincare-serre-oracle", [&](std::string&) {
      if (!oracle)
        return false;
      auto r = symmetry_report(*oracle, model.epsilon());
      return r.poincare && r.serre;
    }));
  }
  for (auto& c : out)
    if (c.passed)
      c.detail.clear();
  return out;
}

std::vector<CheckResult> representation_identities()
{
  std::vector<CheckResult> out;
  out.push_back(run_check("clebsch-gordan-delta", [](std::string& why) {
    for (int i = 1; i <= 15; ++i)
      for (int k = 1; k <= 15; ++k) {
        auto t = tensor(Sl2Module::irreducible(i), Sl2Module::irreducible(k));
        if (delta(t) != std::min(i, k) || t.dimension() != i * k) {
          why = "W_" + std::to_string(i) + " x W_" + std::to_string(k);
          return false;
        }
      }
    return true;
  }));
  out.push_back(run_check("wedge-delta-restricted-partitions", [](std::string& why) {
    for (int i = 1; i <= 12; ++i)
      for (int r = 0; r <= i; ++r)
        if (delta(wedge_irreducible(i, r)) != restricted_count(r * (i - r) / 2, i - r, r)) {
          why = "Lambda^" + std::to_string(r) + " W_" + std::to_string(i);
          return false;
        }
    return true;
  }));
  out.push_back(run_check("wedge-duality", [](std::string& why) {
    for (int i = 1; i <= 12; ++i)
      for (int r = 0; r <= i; ++r)
        if (wedge_irreducible(i, r) != wedge_irreducible(i, i - r)) {
          why = "Lambda^" + std::to_string(r) + " W_" + std::to_string(i);
          return false;
        }
    return true;
  }));
  out.push_back(run_check("weight-oracle", [](std::string& why) {
    for (int i = 1; i <= 12; ++i)
      for (int r = 0; r <= i; ++r)
        if (wedge_irreducible(i, r) != wedge_irreducible_oracle(i, r) ||
            wedge(Sl2Module::irreducible(i), r) != wedge_irreducible_oracle(i, r)) {
          why = "Lambda^" + std::to_string(r) + " W_" + std::to_string(i);
          return false;
        }
    return true;
  }));
  out.push_back(run_check("wedge-of-nW2", [](std::string& why) {
    for (Count n = 1; n <= 8; ++n) {
      const auto v = Sl2Module::irreducible(2, n);
      const Count c2 = binomial(n, 2);
      const Count expected[] = {n, n * n, n * c2, c2 * c2, c2 * binomial(n, 3)};
      for (int k = 1; k <= 5; ++k)
        if (delta(wedge(v, k)) != expected[k - 1]) {
          why = "delta(Lambda^" + std::to_string(k) + " " + std::to_string(n) + "W_2)";
          return false;
        }
    }
    return true;
  }));
  return out;
}

int worker_count()
{
  if (const char* env = std::getenv("ALMAB_WORKERS")) {
    int value = std::atoi(env);
    if (value >= 1)
      return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepSummary run_sweep(const SweepOptions& options)
{
  std::vector<ComplexModel> models;
  for (int n = 1; 2 * n + 2 <= options.max_dim; ++n)
    for (auto& m : enumerate_models(n))
      models.push_back(std::move(m));

  SweepSummary summary;
  std::vector<std::vector<CheckResult>> results(models.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < models.size(); k = next++)
      results[k] = verify_model(models[k], true);
  };
  const int workers = std::min<int>(options.workers > 0 ? options.workers : worker_count(),
                                    std::max<std::size_t>(1, models.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
  for (auto& t : pool)
    t.join();

  for (std::size_t k = 0; k < models.size(); ++k)
    summary.models.push_back({models[k], std::move(results[k])});
  summary.identities = representation_identities();

  for (const auto& mv : summary.models)
    for (const auto& c : mv.checks)
      (c.passed ? summary.passed : summary.failed)++;
  for (const auto& c : summary.identities)
    (c.passed ? summary.passed : summary.failed)++;
  return summary;
}

} // namespace almab
