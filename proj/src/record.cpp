#include "almab/record.hpp"

#include <cstdio>
#include <sstream>

namespace almab {

ExportRecord make_record(const ComplexModel& model, bool use_oracle)
{
  const CohomologyTable table = use_oracle ? oracle_table(model) : closed_form_table(model);
  ExportRecord r;
  r.n = model.n();
  r.q = model.q();
  r.j = model.j();
  r.epsilon = model.epsilon();
  r.m = model.jordan();
  r.step = nilpotency_step(model);
  r.equations = structure_equations(model);
  r.betti = table.betti;
  r.hodge = table.hodge;
  r.source = table.source;
  r.checks.frolicher = frolicher_holds(table);
  r.checks.symmetry = symmetry_report(table, model.epsilon()).passed();
  r.checks.nijenhuis = nijenhuis_vanishes(build_algebra(model));
  return r;
}

nlohmann::ordered_json to_json(const ExportRecord& r)
{
  nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
  for (std::size_t g = 0; g < r.equations.generators.size(); ++g) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : r.equations.differentials[g])
      terms.push_back({{"coef", t.coef},
                       {"factors", {r.equations.factor_name(t.first), r.equations.factor_name(t.second)}}});
    eqs.push_back({{"gen", r.equations.generators[g].label}, {"d", terms}});
  }
  nlohmann::ordered_json checks = {{"frolicher", r.checks.frolicher}};
  checks["symmetry"] = r.checks.symmetry ? nlohmann::ordered_json(*r.checks.symmetry) : nlohmann::ordered_json();
  checks["nijenhuis"] = r.checks.nijenhuis;
  return {
    {"n", r.n},
    {"q", r.q.parts()},
    {"j", r.j},
    {"epsilon", r.epsilon},
    {"m", r.m.parts()},
    {"step", r.step},
    {"betti", r.betti},
    {"hodge", r.hodge},
    {"source", to_string(r.source)},
    {"equations", eqs},
    {"checks", checks},
  };
}

namespace {

FormGenerator parse_generator(const std::string& label)
{
  if (label == "alpha")
    return {label, -1, 0};
  int block = 0;
  int index = 0;
  char tail = 0;
  if (std::sscanf(label.c_str(), "beta^%d_%d%c", &block, &index, &tail) != 2 || block < 0 || index < 1)
    throw std::invalid_argument("unknown generator '" + label + "'");
  return {label, block, index};
}

FormFactor parse_factor(const std::string& name, const std::vector<FormGenerator>& gens)
{
  std::string base = name;
  bool conj = false;
  if (name.size() > 5 && name.rfind("bar(", 0) == 0 && name.back() == ')') {
    base = name.substr(4, name.size() - 5);
    conj = true;
  }
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].label == base)
      return {static_cast<int>(g), conj};
  throw std::invalid_argument("factor '" + name + "' names no generator");
}

} // namespace

ExportRecord record_from_json(const nlohmann::json& json)
{
  try {
    ExportRecord r;
    r.n = json.at("n").get<int>();
    r.q = Partition(json.at("q").get<std::vector<int>>());
    r.j = json.at("j").get<int>();
    r.epsilon = json.at("epsilon").get<int>();
    r.m = Partition(json.at("m").get<std::vector<int>>());
    r.step = json.at("step").get<int>();
    r.betti = json.at("betti").get<std::vector<Count>>();
    r.hodge = json.at("hodge").get<std::vector<std::vector<Count>>>();
    const auto source = json.value("source", std::string("closed-form"));
    if (source == "oracle")
      r.source = TableSource::oracle;
    else if (source == "closed-form")
      r.source = TableSource::closed_form;
    else
      throw std::invalid_argument("unknown source '" + source + "'");

    for (const auto& e : json.at("equations"))
      r.equations.generators.push_back(parse_generator(e.at("gen").get<std::string>()));
    for (const auto& e : json.at("equations")) {
      std::vector<EquationTerm> terms;
      for (const auto& t : e.at("d")) {
        const auto& factors = t.at("factors");
        if (factors.size() != 2)
          throw std::invalid_argument("each term needs exactly two factors");
        terms.push_back({t.at("coef").get<long long>(),
                         parse_factor(factors[0].get<std::string>(), r.equations.generators),
                         parse_factor(factors[1].get<std::string>(), r.equations.generators)});
      }
      r.equations.differentials.push_back(std::move(terms));
    }
    const auto& checks = json.at("checks");
    r.checks.frolicher = checks.at("frolicher").get<bool>();
    if (!checks.at("symmetry").is_null())
      r.checks.symmetry = checks.at("symmetry").get<bool>();
    r.checks.nijenhuis = checks.at("nijenhuis").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

namespace {

std::string join(const std::vector<Count>& values)
{
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k)
      out += ' ';
    out += std::to_string(values[k]);
  }
  return out;
}

const char* yes_no(bool b)
{
  return b ? "pass" : "FAIL";
}

} // namespace

std::string to_text(const ExportRecord& r)
{
  std::ostringstream out;
  out << "model    q=[" << r.q.to_string() << "] j=" << r.j << " epsilon=" << r.epsilon << " dim=" << 2 * r.n + 2
      << '\n';
  out << "jordan   [" << r.m.to_string() << "]\n";
  out << "step     " << r.step << '\n';
  out << "source   " << to_string(r.source) << '\n';
  out << "betti    " << join(r.betti) << '\n';
  out << "hodge    rows p = 0.." << r.hodge.size() - 1 << ", columns q = 0.." << r.hodge.size() - 1 << '\n';
  for (std::size_t p = 0; p < r.hodge.size(); ++p)
    out << "  p=" << p << "    " << join(r.hodge[p]) << '\n';
  out << "checks   frolicher=" << yes_no(r.checks.frolicher)
      << " symmetry=" << (r.checks.symmetry ? yes_no(*r.checks.symmetry) : "n/a")
      << " nijenhuis=" << yes_no(r.checks.nijenhuis) << '\n';
  return out.str();
}

std::string to_salamon(const StructureEquations& eq)
{
  auto factor = [](const FormFactor& f) {
    return std::to_string(f.generator + 1) + (f.conjugate ? "b" : "");
  };
  std::string out = "(";
  for (std::size_t g = 0; g < eq.differentials.size(); ++g) {
    if (g)
      out += ", ";
    const auto& terms = eq.differentials[g];
    if (terms.empty()) {
      out += '0';
      continue;
    }
    for (std::size_t t = 0; t < terms.size(); ++t) {
      long long c = terms[t].coef;
      if (t)
        out += c < 0 ? " - " : " + ";
      else if (c < 0)
        out += '-';
      long long mag = c < 0 ? -c : c;
      if (mag != 1)
        out += std::to_string(mag) + '*';
      out += factor(terms[t].first) + '^' + factor(terms[t].second);
    }
  }
  out += ')';
  return out;
}

} // namespace almab
