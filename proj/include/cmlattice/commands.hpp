#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmlattice/analysis.hpp"
#include "cmlattice/problem.hpp"
#include "cmlattice/report.hpp"
#include "cmlattice/selfcheck.hpp"

namespace cmlattice {

/// Commands that take a problem: faces, analyze, pair, nu, seqcm,
/// gorenstein, localcoh0, psi, regularize.
const std::vector<std::string>& problem_commands();

struct CommandOptions {
  /// Required by `psi`.
  std::optional<IntVector> point;
};

/// Deterministic for a fixed problem and command. Errors: those of the
/// underlying operations; ValidationError for an unknown command or a
/// missing option.
ReportDocument run_command(const std::string& command, const ResolvedProblem& problem,
                           const CommandOptions& options = {});

/// Schema-1 table: {"schema": 1, "entries": [{"i", "dim_rw", "multiplicity", "prime"}]}.
std::vector<AbstractNuEntry> parse_nu_table(std::string_view text);
std::string nu_table_to_json(const std::vector<AbstractNuEntry>& table);
ReportDocument run_nu_analyze(const std::vector<AbstractNuEntry>& table, int p, bool simplicial_cm);

ReportDocument selfcheck_report(const SelfcheckSummary& summary, const std::string& scope,
                                const SelfcheckOptions& options);

/// Generator-index-set label of a face, e.g. "{0,2}".
std::string face_name(const SemigroupCone& cone, FaceId f);
IntVector parse_point(const std::string& text);

}  // namespace cmlattice
