#ifndef ALMAB_VERIFY_HPP
#define ALMAB_VERIFY_HPP

#include <string>
#include <vector>

#include "almab/model.hpp"

namespace almab {

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail; ///< empty on success
};

struct ModelVerification
{
  ComplexModel model;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Structural and cohomological checks for one model. The oracle comparisons
/// (the expensive part) run only when `with_oracle` is set.
std::vector<CheckResult> verify_model(const ComplexModel& model, bool with_oracle = true);

/// Representation-calculus identities: Clebsch-Gordan counts, the restricted
/// partition formula for delta of exterior powers, duality of exterior powers,
/// agreement with the weight-enumeration oracle and the exterior powers of nW_2.
std::vector<CheckResult> representation_identities();

struct SweepOptions
{
  int max_dim = 12;
  /// 0: use ALMAB_WORKERS, else the hardware concurrency.
  int workers = 0;
};

struct SweepSummary
{
  std::vector<ModelVerification> models;
  std::vector<CheckResult> identities;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_passed() const { return failed == 0; }
};

/// Runs verify_model over every model with 4 <= dim <= max_dim in parallel,
/// merging results in enumeration order, plus representation_identities().
SweepSummary run_sweep(const SweepOptions& options);

/// Worker count from ALMAB_WORKERS (at least 1), defaulting to the hardware concurrency.
int worker_count();

} // namespace almab

#endif
