#include "cmlattice/commands.hpp"

#include <algorithm>
#include <sstream>

#include "cmlattice/error.hpp"

namespace cmlattice {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v, const char* absent) {
  return v ? json(*v) : json(absent);
}

json index_list(const IndexSet& s) { return json(s); }

void add_nu_table(ReportDocument& doc, const SemigroupCone& cone, const NuTable& nu) {
  ReportTable t{"nu", {"i", "face", "cone_dim", "multiplicity"}, {}};
  for (const auto& [key, mult] : nu.entries())
    t.rows.push_back({key.first, face_name(cone, key.second), cone.face(key.second).cone_dim, mult});
  doc.tables.push_back(std::move(t));
}

void add_local_coh0(ReportDocument& doc, const LocalCohomologyDeg0& lc) {
  doc.add("local_coh0", lc.dims, "local-duality-at-origin");
  doc.add("sheaf_cohomology", lc.sheaf, "sheaf-cochains-on-cross-section");
}

void add_seqcm(ReportDocument& doc, const SeqCmVerdict& v) {
  doc.add("seqcm", v.route_ext, "ext-modules-cm-complementary");
  doc.add("seqcm.route_ext", v.route_ext, "ext-modules-cm-complementary");
  doc.add("seqcm.route_duval", v.route_duval, "pure-skeleta-cm");
  doc.add("seqcm.route_filtration", v.route_filtration, "filtration-pairs-cm");
}

void add_module_report(ReportDocument& doc, const SemigroupCone& cone, const AnalysisReport& rep) {
  doc.add("dimension", optional_int(rep.dimension, "-inf"), "support-max-cone-dim");
  doc.add("depth", optional_int(rep.depth, "undefined"), "depth-min-nu-support");
  doc.add("cm", rep.cm, "cm-nu-concentration");
  doc.add("ir_dim", optional_int(rep.ir_dim, "-inf"), "max-nu-index");
  if (rep.serre_max) doc.add("serre_max", optional_int(*rep.serre_max, "infinity"), "serre-nu-vanishing");
  doc.add("gcm", rep.finite_length.gcm, "ext-support-at-origin");
  doc.add("buchsbaum", rep.finite_length.buchsbaum, "buchsbaum-equals-gcm-squarefree");
  if (rep.seqcm_routes)
    add_seqcm(doc, *rep.seqcm_routes);
  else
    doc.add("seqcm", rep.seqcm, "ext-modules-cm-complementary");
  if (rep.gorenstein_star) doc.add("gorenstein_star", *rep.gorenstein_star, "canonical-module-degree-zero");
  add_local_coh0(doc, rep.local_coh0);

  add_nu_table(doc, cone, rep.nu);
  ReportTable fl{"finite_length", {"i", "finite_length"}, {}};
  for (std::size_t i = 0; i < rep.finite_length.finite_length.size(); ++i)
    fl.rows.push_back({i, static_cast<bool>(rep.finite_length.finite_length[i])});
  doc.tables.push_back(std::move(fl));
  ReportTable st{"linear_strands", {"strand", "nonzero", "acyclic", "term_dims"}, {}};
  for (const auto& s : rep.strands) st.rows.push_back({s.strand, s.nonzero(), s.acyclic, s.term_dims});
  doc.tables.push_back(std::move(st));
  if (rep.serre_max && *rep.serre_max && **rep.serre_max < 2)
    doc.notes.push_back("serre_max below 2 is outside the range characterized by the nu-table test");
}

const OrderIdeal& delta_of(const ResolvedProblem& problem) { return *problem.delta; }

SqModule problem_module(const ResolvedProblem& problem) {
  return pair_module(IdealPair(*problem.delta, problem.sigma), problem.spec.field);
}

ReportDocument faces_report(const ResolvedProblem& problem) {
  const SemigroupCone& cone = *problem.cone;
  ReportDocument doc;
  doc.add("dimension", cone.dimension(), "ambient-rank");
  doc.add("facet_count", cone.facet_normals().size(), "primitive-facet-normals");
  doc.add("face_count", cone.face_count(), "meet-closure-of-facets");
  doc.add("simplicial", cone.is_simplicial(), "ray-count-equals-rank");
  std::int64_t box = problem.spec.normality_box.value_or(0);
  if (!problem.spec.normality_box)
    for (const auto& g : cone.generators())
      for (auto x : g) box = std::max(box, x < 0 ? -x : x);
  const NormalityVerdict nv = verify_normality_bounded(cone, box);
  doc.add("normality_box", box, "bounded-semigroup-membership");
  doc.add("normality_consistent", nv.consistent, "bounded-semigroup-membership");
  if (nv.counterexample) doc.add("normality_counterexample", *nv.counterexample, "bounded-semigroup-membership");

  ReportTable normals{"facet_normals", {"index", "normal"}, {}};
  for (std::size_t k = 0; k < cone.facet_normals().size(); ++k)
    normals.rows.push_back({k, cone.facet_normals()[k]});
  doc.tables.push_back(std::move(normals));
  ReportTable faces{"faces", {"generators", "cone_dim", "facet_zero_set", "interior_point", "in_delta"}, {}};
  for (const Face& f : cone.faces())
    faces.rows.push_back({face_name(cone, f.id), f.cone_dim, index_list(f.facet_zero_set), f.interior_point,
                          problem.delta->contains(f.id)});
  doc.tables.push_back(std::move(faces));
  ReportTable covers{"covers", {"lower", "upper", "sign"}, {}};
  for (const Cover& c : cone.covers())
    covers.rows.push_back({face_name(cone, c.lower), face_name(cone, c.upper), c.sign});
  doc.tables.push_back(std::move(covers));
  return doc;
}

ReportDocument pair_report(const ResolvedProblem& problem) {
  const SemigroupCone& cone = *problem.cone;
  const Field& field = problem.spec.field;
  const IdealPair pair(*problem.delta, problem.sigma);
  ReportDocument doc;
  doc.add("difference_size", pair.difference().size(), "pair-difference");
  const bool cm = is_cm_pair(pair, field);
  const SqModule m = pair_module(pair, field);
  const AnalysisReport rep = analyze_module(m);
  doc.add("cm_pair", cm, "pair-complex-concentration");
  add_module_report(doc, cone, rep);
  return doc;
}

ReportDocument psi_report(const ResolvedProblem& problem, const CommandOptions& options) {
  const SemigroupCone& cone = *problem.cone;
  if (!options.point)
    throw Error(ErrorCode::ValidationError, "psi needs --point", "missing-point");
  const IntVector& a = *options.point;
  if (a.size() != cone.dimension())
    throw Error(ErrorCode::ValidationError, "point has the wrong dimension", "bad-point-length");
  ReportDocument doc;
  doc.add("point", a, "input");
  doc.add("lattice_membership", cone.contains(a), "facet-inequalities");
  doc.add("supp_plus", index_list(cone.supp_plus(a)), "positive-support");
  doc.add("member", cone.psi_membership(a), "positive-support-containment");
  if (cone.contains(a)) doc.add("face_of_point", face_name(cone, cone.face_of_point(a)), "vanishing-facets");
  return doc;
}

ReportDocument regularize_report(const ResolvedProblem& problem) {
  const SemigroupCone& cone = *problem.cone;
  const SqModule m = problem_module(problem);
  const SqModule reg = regularize(m);
  ReportDocument doc;
  doc.add("zero_face_dim_before", m.value_dim(cone.zero_face()), "input-module");
  doc.add("zero_face_dim_after", reg.value_dim(cone.zero_face()), "global-sections");
  add_local_coh0(doc, local_cohomology_deg0(reg));
  ReportTable t{"value_dims", {"face", "before", "after"}, {}};
  for (FaceId f = 0; f < cone.face_count(); ++f)
    t.rows.push_back({face_name(cone, f), m.value_dim(f), reg.value_dim(f)});
  doc.tables.push_back(std::move(t));
  return doc;
}

}  // namespace

const std::vector<std::string>& problem_commands() {
  static const std::vector<std::string> names = {"faces", "analyze", "pair", "nu", "seqcm",
                                                 "gorenstein", "localcoh0", "psi", "regularize"};
  return names;
}

std::string face_name(const SemigroupCone& cone, FaceId f) {
  std::string out = "{";
  const auto& g = cone.face(f).generator_set;
  for (std::size_t k = 0; k < g.size(); ++k) out += (k ? "," : "") + std::to_string(g[k]);
  return out + "}";
}

IntVector parse_point(const std::string& text) {
  IntVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorCode::ValidationError, "bad coordinate '" + item + "' in point", "bad-point");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ValidationError, "empty point", "bad-point");
  return out;
}

ReportDocument run_command(const std::string& command, const ResolvedProblem& problem,
                           const CommandOptions& options) {
  const SemigroupCone& cone = *problem.cone;
  const Field& field = problem.spec.field;
  ReportDocument doc;
  if (command == "faces") {
    doc = faces_report(problem);
  } else if (command == "analyze") {
    add_module_report(doc, cone, analyze_face_ring(delta_of(problem), field));
    if (problem.sigma) doc.notes.push_back("sigma is ignored by analyze; use pair");
  } else if (command == "pair") {
    doc = pair_report(problem);
  } else if (command == "nu") {
    const SqModule m = problem_module(problem);
    const NuTable nu = nu_table(m);
    doc.add("ir_dim", optional_int(irreducible_dimension(m), "-inf"), "max-nu-index");
    add_nu_table(doc, cone, nu);
  } else if (command == "seqcm") {
    add_seqcm(doc, seq_cm(delta_of(problem), field));
  } else if (command == "gorenstein") {
    const SqModule ring = face_ring(delta_of(problem), field);
    doc.add("dimension", optional_int(module_dimension(ring), "-inf"), "support-max-cone-dim");
    doc.add("cm", is_cohen_macaulay(ring), "cm-nu-concentration");
    doc.add("gorenstein_star", is_gorenstein_star(delta_of(problem), field), "canonical-module-degree-zero");
  } else if (command == "localcoh0") {
    add_local_coh0(doc, local_cohomology_deg0(problem_module(problem)));
  } else if (command == "psi") {
    doc = psi_report(problem, options);
  } else if (command == "regularize") {
    doc = regularize_report(problem);
  } else {
    throw Error(ErrorCode::ValidationError, "unknown command '" + command + "'", "unknown-command");
  }
  doc.command = command;
  doc.field = field.name();
  return doc;
}

std::vector<AbstractNuEntry> parse_nu_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON", "malformed-json");
  }
  try {
    if (doc.at("schema").get<int>() != 1)
      throw Error(ErrorCode::ValidationError, "/schema: schema must be 1", "unsupported-schema");
    std::vector<AbstractNuEntry> out;
    for (const auto& e : doc.at("entries"))
      out.push_back({e.at("i").get<int>(), e.at("dim_rw").get<int>(), e.at("multiplicity").get<std::size_t>(),
                     e.value("prime", true)});
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ValidationError, std::string("malformed nu-table: ") + e.what(), "bad-nu-table");
  }
}

std::string nu_table_to_json(const std::vector<AbstractNuEntry>& table) {
  json j;
  j["schema"] = 1;
  j["entries"] = json::array();
  for (const auto& e : table)
    j["entries"].push_back({{"i", e.i}, {"dim_rw", e.dim_rw}, {"multiplicity", e.multiplicity}, {"prime", e.prime}});
  return j.dump(2) + "\n";
}

ReportDocument run_nu_analyze(const std::vector<AbstractNuEntry>& table, int p, bool simplicial_cm) {
  const AbstractNuReport rep = analyze_nu_table(table, p, simplicial_cm);
  ReportDocument doc;
  doc.command = "nu-analyze";
  doc.field = "n/a";
  doc.add("p", rep.p, "input");
  doc.add("dimension_from_table", rep.dimension_from_table, "nu0-max-dim");
  doc.add("depth", rep.depth, "depth-min-dim-plus-index");
  doc.add("cm", rep.cm, "cm-dimension-window");
  doc.add("serre_max", optional_int(rep.serre_max, "infinity"), "serre-low-dimension-vanishing");
  doc.add("gcm", rep.gcm, "gcm-no-intermediate-dimension");
  doc.add("buchsbaum_sufficient", rep.buchsbaum_sufficient, "buchsbaum-maximal-ideal-only");
  doc.notes = rep.caveats;
  return doc;
}

ReportDocument selfcheck_report(const SelfcheckSummary& summary, const std::string& scope,
                                const SelfcheckOptions& options) {
  ReportDocument doc;
  doc.command = "selfcheck";
  for (const Field& f : options.fields) doc.field += (doc.field.empty() ? "" : ",") + f.name();
  doc.add("scope", scope, "input");
  doc.add("passed", summary.passed(), "invariant-suites");
  doc.add("suites_run", summary.outcomes.size(), "invariant-suites");
  doc.add("failures", summary.failures(), "invariant-suites");
  ReportTable t{"suites", {"suite", "subject", "instances", "status", "message"}, {}};
  for (const auto& o : summary.outcomes)
    t.rows.push_back({o.suite, o.subject, o.instances, o.passed ? "pass" : "FAIL", o.message});
  doc.tables.push_back(std::move(t));
  doc.notes = summary.notes;
  return doc;
}

}  // namespace cmlattice
