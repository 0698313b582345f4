#ifndef ALMAB_RECORD_HPP
#define ALMAB_RECORD_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "almab/cohomology.hpp"
#include "almab/model.hpp"

namespace almab {

struct RecordChecks
{
  bool frolicher = false;
  std::optional<bool> symmetry;
  bool nijenhuis = false;
  bool operator==(const RecordChecks&) const = default;
};

/// Everything the CLI reports about one model; serialises to the JSON schema
/// in schema/export_record.schema.json.
struct ExportRecord
{
  int n = 0;
  Partition q;
  int j = 1;
  int epsilon = 0;
  Partition m;
  int step = 0;
  StructureEquations equations;
  std::vector<Count> betti;
  std::vector<std::vector<Count>> hodge;
  TableSource source = TableSource::closed_form;
  RecordChecks checks;

  bool operator==(const ExportRecord&) const = default;
};

/// Builds the record from the closed-form tables, or from the oracle tables
/// when `use_oracle` is set.
ExportRecord make_record(const ComplexModel& model, bool use_oracle = false);

nlohmann::ordered_json to_json(const ExportRecord& record);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
ExportRecord record_from_json(const nlohmann::json& json);

/// Stable line-oriented rendering.
std::string to_text(const ExportRecord& record);

/// Compact tuple notation: entry k lists d of the k-th (1,0)-generator as a
/// sum of wedge pairs "a^b" of generator numbers (1 = alpha), with a trailing
/// "b" marking a conjugate, e.g. "(0, 1^1b)".
std::string to_salamon(const StructureEquations& equations);

} // namespace almab

#endif
