#include "almab/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "almab/record.hpp"
#include "almab/verify.hpp"

namespace almab {

namespace {

CLI::Validator even_dim(int minimum)
{
  return CLI::Validator(
    [minimum](std::string& value) -> std::string {
      int d = 0;
      try {
        d = std::stoi(value);
      } catch (const std::exception&) {
        return "not an integer: " + value;
      }
      if (d < minimum || d % 2 != 0)
        return "dimension must be even and at least " + std::to_string(minimum) + ", got " + value;
      return {};
    },
    "EVEN>=" + std::to_string(minimum));
}

int write_output(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err)
{
  if (path.empty()) {
    out << text;
    return exit_status::ok;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return exit_status::usage;
  }
  file << text;
  return exit_status::ok;
}

int cmd_enumerate(int dim, std::ostream& out)
{
  out << std::left << std::setw(20) << "m" << std::setw(14) << "q" << std::setw(4) << "j" << std::setw(9)
      << "epsilon" << std::setw(6) << "step"
      << "dim[g,g]\n";
  for (const auto& model : enumerate_models(dim / 2 - 1)) {
    const auto alg = build_algebra(model);
    out << std::setw(20) << "[" + model.jordan().to_string() + "]" << std::setw(14)
        << "[" + model.q().to_string() + "]" << std::setw(4) << model.j() << std::setw(9) << model.epsilon()
        << std::setw(6) << nilpotency_step(model) << commutator_dim(alg) << '\n';
  }
  return exit_status::ok;
}

int cmd_classify(const std::string& jordan, std::ostream& out, std::ostream& err)
{
  const Partition m = parse_partition(jordan);
  if (m.sum() < 3 || m.sum() % 2 == 0) {
    err << "error: the Jordan type must be a partition of an odd number >= 3, got [" << m.to_string() << "]\n";
    return exit_status::usage;
  }
  const auto witness = admits_complex_structure(m);
  if (!witness) {
    out << "m=[" << m.to_string() << "]: no complex structure\n";
    return exit_status::not_classified;
  }
  const auto model = ComplexModel::make(witness->first, witness->second);
  out << "m=[" << m.to_string() << "]: complex structure exists, q=[" << model.q().to_string()
      << "] j=" << model.j() << " epsilon=" << model.epsilon() << '\n';
  return exit_status::ok;
}

int cmd_verify(int max_dim, std::ostream& out)
{
  SweepOptions options;
  options.max_dim = max_dim;
  const auto summary = run_sweep(options);
  for (const auto& mv : summary.models)
    for (const auto& c : mv.checks)
      if (!c.passed)
        out << "FAIL " << mv.model.to_string() << ' ' << c.name << ": " << c.detail << '\n';
  for (const auto& c : summary.identities)
    if (!c.passed)
      out << "FAIL identity " << c.name << ": " << c.detail << '\n';
  out << "models  " << summary.models.size() << '\n';
  out << "checks  " << summary.passed + summary.failed << '\n';
  out << "passed  " << summary.passed << '\n';
  out << "failed  " << summary.failed << '\n';
  return summary.all_passed() ? exit_status::ok : exit_status::verify_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Nilpotent almost abelian Lie algebras with complex structures"};
  app.name("almab");
  app.require_subcommand(1);

  int dim = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List every model of the given real dimension");
  enumerate->add_option("--dim", dim, "Real dimension (even, >= 4)")->required()->check(even_dim(4));

  std::string jordan;
  auto* classify = app.add_subcommand("classify", "Decide whether a Jordan type admits a complex structure");
  classify->add_option("--jordan", jordan, "Jordan type of ad(e_0) on the abelian ideal, e.g. 3,2")->required();

  std::string q;
  int j = 0;
  std::string format = "text";
  bool oracle = false;
  std::string output;
  auto* invariants = app.add_subcommand("invariants", "Betti and Hodge numbers of a model");
  invariants->add_option("--q", q, "Complex Jordan type, e.g. 2,1")->required();
  invariants->add_option("--j", j, "Overlapping block size")->required();
  invariants->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  invariants->add_flag("--oracle", oracle, "Compute by explicit cochain complexes instead of the closed formulas");
  invariants->add_option("--output", output, "Write to a file instead of stdout");

  int max_dim = 12;
  auto* verify = app.add_subcommand("verify", "Cross-check every model up to a dimension");
  verify->add_option("--max-dim", max_dim, "Largest real dimension (even, >= 4)")->check(even_dim(4));

  std::string export_format;
  auto* exporter = app.add_subcommand("export", "Structure equations of a model");
  exporter->add_option("--q", q, "Complex Jordan type, e.g. 2,1")->required();
  exporter->add_option("--j", j, "Overlapping block size")->required();
  exporter->add_option("--format", export_format, "json or salamon")
    ->required()
    ->check(CLI::IsMember({"json", "salamon"}));
  exporter->add_option("--output", output, "Write to a file instead of stdout");

  std::vector<std::string> argv_storage{"almab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_status::ok : exit_status::usage;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(dim, out);
    if (classify->parsed())
      return cmd_classify(jordan, out, err);
    if (verify->parsed())
      return cmd_verify(max_dim, out);

    const auto model = ComplexModel::make(parse_partition(q), j);
    if (invariants->parsed()) {
      const auto record = make_record(model, oracle);
      return write_output(format == "json" ? to_json(record).dump(2) + "\n" : to_text(record), output, out, err);
    }
    const auto equations = structure_equations(model);
    if (export_format == "salamon")
      return write_output(to_salamon(equations) + "\n", output, out, err);
    return write_output(to_json(make_record(model)).dump(2) + "\n", output, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_status::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_status::verify_failed;
  }
}

} // namespace almab
