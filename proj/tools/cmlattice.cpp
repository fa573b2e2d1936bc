#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cmlattice/commands.hpp"
#include "cmlattice/error.hpp"
#include "cmlattice/fixtures.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelfcheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw cmlattice::Error(cmlattice::ErrorCode::ValidationError, "cannot read '" + path + "'", "unreadable-file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cmlattice::ProblemSpec fixture_problem(const std::string& name) {
  using namespace cmlattice;
  ProblemSpec spec;
  for (const auto& cx : builtin_complexes())
    if (cx.name == name) {
      spec.generators = cone_fixture(cx.cone).generators;
      spec.complex.kind = ComplexSpec::Kind::Seeds;
      spec.complex.seeds = cx.seeds;
      return spec;
    }
  spec.generators = cone_fixture(name).generators;
  return spec;
}

void emit(const cmlattice::ReportDocument& doc, const std::string& format) {
  if (format == "json")
    std::cout << cmlattice::report_to_json(doc).dump(2) << "\n";
  else
    std::cout << cmlattice::report_to_text(doc);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cmlattice;

  CLI::App app{"Homological verdicts for radical monomial ideals over normal semigroup rings"};
  std::string command;
  std::string input, fixture, format = "text", field_text, point_text, table_path;
  std::int64_t normality_box = -1;
  int p = -1;
  bool simplicial = false;

  std::vector<std::string> commands = problem_commands();
  commands.push_back("nu-analyze");
  commands.push_back("selfcheck");
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(commands));
  app.add_option("--input", input, "Problem file (JSON, schema 1)");
  app.add_option("--fixture", fixture, "Builtin cone or complex fixture instead of --input");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", field_text, "Coefficient field: q or p:N (overrides the problem)");
  app.add_option("--normality-box", normality_box, "Box bound for the normality check")->check(CLI::NonNegativeNumber);
  app.add_option("--point", point_text, "Lattice point v1,v2,... for psi");
  app.add_option("--table", table_path, "Abstract nu-table file for nu-analyze");
  app.add_option("--p", p, "Module dimension for nu-analyze");
  app.add_flag("--simplicial", simplicial, "Assert a simplicial Cohen-Macaulay ambient ring for nu-analyze");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (command == "nu-analyze") {
      if (table_path.empty() || p < 0)
        throw Error(ErrorCode::ValidationError, "nu-analyze needs --table and --p", "missing-option");
      emit(run_nu_analyze(parse_nu_table(read_file(table_path)), p, simplicial), format);
      return kExitOk;
    }

    std::optional<ProblemSpec> spec;
    if (!input.empty())
      spec = parse_problem(read_file(input));
    else if (!fixture.empty())
      spec = fixture_problem(fixture);
    if (spec) {
      if (!field_text.empty()) spec->field = Field::parse(field_text);
      if (normality_box >= 0) spec->normality_box = normality_box;
    }

    if (command == "selfcheck") {
      SelfcheckOptions options;
      if (!field_text.empty()) options.fields = {Field::parse(field_text)};
      if (normality_box >= 0) options.normality_box = normality_box;
      SelfcheckSummary summary;
      std::string scope = "builtin fixtures";
      if (spec) {
        const ResolvedProblem problem = resolve_problem(*spec);
        std::vector<std::vector<IndexSet>> extra;
        if (spec->complex.kind == ComplexSpec::Kind::Seeds) extra.push_back(spec->complex.seeds);
        scope = input.empty() ? fixture : input;
        summary = selfcheck_cone(*problem.cone, scope, options, extra);
      } else {
        summary = selfcheck_builtin(options);
      }
      emit(selfcheck_report(summary, scope, options), format);
      return summary.passed() ? kExitOk : kExitSelfcheckFailed;
    }

    if (!spec) throw Error(ErrorCode::ValidationError, command + " needs --input or --fixture", "missing-input");
    const ResolvedProblem problem = resolve_problem(*spec);
    CommandOptions options;
    if (!point_text.empty()) options.point = parse_point(point_text);
    emit(run_command(command, problem, options), format);
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]";
    if (!e.detail().empty()) std::cerr << " (" << e.detail() << ")";
    std::cerr << ": " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? kExitInconsistent : kExitInvalid;
  }
}
