#include "cmlattice/problem.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "cmlattice/error.hpp"
#include "cmlattice/fixtures.hpp"

namespace cmlattice {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& path, const std::string& what, const std::string& detail) {
  throw Error(ErrorCode::ValidationError, path + ": " + what, detail);
}

std::int64_t as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer", "expected-integer");
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array", "expected-array");
  return j;
}

IntVector int_vector(const json& j, const std::string& path) {
  IntVector out;
  for (std::size_t k = 0; k < as_array(j, path).size(); ++k)
    out.push_back(as_integer(j[k], path + "/" + std::to_string(k)));
  return out;
}

ComplexSpec complex_spec(const json& j, const std::string& path) {
  ComplexSpec spec;
  if (j.is_string()) {
    if (j.get<std::string>() != "all") invalid(path, "expected \"all\" or an object", "bad-complex");
    return spec;
  }
  if (!j.is_object() || j.size() != 1)
    invalid(path, "expected \"all\" or an object with exactly one of delta_seeds, ideal_exponents",
            "bad-complex");
  if (j.contains("delta_seeds")) {
    spec.kind = ComplexSpec::Kind::Seeds;
    const std::string p = path + "/delta_seeds";
    const json& seeds = as_array(j["delta_seeds"], p);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
      const std::string sp = p + "/" + std::to_string(k);
      std::set<std::size_t> set;
      for (std::int64_t g : int_vector(seeds[k], sp)) {
        if (g < 0) invalid(sp, "generator indices are non-negative", "bad-generator-index");
        set.insert(static_cast<std::size_t>(g));
      }
      spec.seeds.emplace_back(set.begin(), set.end());
    }
  } else if (j.contains("ideal_exponents")) {
    spec.kind = ComplexSpec::Kind::Exponents;
    const std::string p = path + "/ideal_exponents";
    const json& exps = as_array(j["ideal_exponents"], p);
    for (std::size_t k = 0; k < exps.size(); ++k)
      spec.exponents.push_back(int_vector(exps[k], p + "/" + std::to_string(k)));
  } else {
    invalid(path, "expected delta_seeds or ideal_exponents", "bad-complex");
  }
  return spec;
}

json complex_to_json(const ComplexSpec& spec) {
  switch (spec.kind) {
    case ComplexSpec::Kind::All:
      return "all";
    case ComplexSpec::Kind::Seeds:
      return json{{"delta_seeds", spec.seeds}};
    case ComplexSpec::Kind::Exponents:
      return json{{"ideal_exponents", spec.exponents}};
  }
  return "all";
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": malformed JSON",
                "malformed-json");
  }
  if (!doc.is_object()) invalid("/", "expected an object", "expected-object");
  static const std::set<std::string> known = {"schema", "field", "generators", "complex", "sigma",
                                              "normality_box"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) invalid("/" + key, "unknown field", "unknown-field");
  if (!doc.contains("schema") || as_integer(doc["schema"], "/schema") != 1)
    invalid("/schema", "schema must be 1", "unsupported-schema");

  ProblemSpec spec;
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) invalid("/field", "expected a string", "expected-string");
    spec.field = Field::parse(doc["field"].get<std::string>());
  }
  if (!doc.contains("generators")) invalid("/generators", "missing", "missing-field");
  const json& gens = as_array(doc["generators"], "/generators");
  if (gens.empty()) throw Error(ErrorCode::DegenerateInput, "/generators: empty generator list");
  for (std::size_t k = 0; k < gens.size(); ++k)
    spec.generators.push_back(int_vector(gens[k], "/generators/" + std::to_string(k)));
  if (doc.contains("complex")) spec.complex = complex_spec(doc["complex"], "/complex");
  if (doc.contains("sigma")) spec.sigma = complex_spec(doc["sigma"], "/sigma");
  if (doc.contains("normality_box")) {
    const std::int64_t n = as_integer(doc["normality_box"], "/normality_box");
    if (n < 0) invalid("/normality_box", "must be non-negative", "bad-normality-box");
    spec.normality_box = n;
  }
  (void)resolve_problem(spec);
  return spec;
}

OrderIdeal resolve_complex(const SemigroupCone& cone, const ComplexSpec& spec) {
  switch (spec.kind) {
    case ComplexSpec::Kind::All:
      return OrderIdeal::whole(cone);
    case ComplexSpec::Kind::Seeds:
      return order_ideal_from_generator_sets(cone, spec.seeds);
    case ComplexSpec::Kind::Exponents:
      for (const auto& e : spec.exponents)
        if (e.size() != cone.dimension())
          invalid("/complex/ideal_exponents", "exponent of the wrong length", "bad-exponent-length");
      return OrderIdeal::from_ideal_generators(cone, spec.exponents);
  }
  return OrderIdeal::whole(cone);
}

ResolvedProblem resolve_problem(const ProblemSpec& spec) {
  ResolvedProblem out;
  out.spec = spec;
  out.cone = std::make_unique<SemigroupCone>(SemigroupCone::build(spec.generators));
  if (spec.normality_box) {
    std::int64_t top = 0;
    for (const auto& g : spec.generators)
      for (auto x : g) top = std::max(top, x < 0 ? -x : x);
    if (*spec.normality_box < top)
      invalid("/normality_box", "must be at least the largest generator coordinate",
              "normality-box-too-small");
  }
  out.delta = resolve_complex(*out.cone, spec.complex);
  if (spec.sigma) {
    out.sigma = resolve_complex(*out.cone, *spec.sigma);
    (void)IdealPair(*out.delta, out.sigma);
  }
  return out;
}

std::string problem_to_json(const ProblemSpec& spec) {
  json j;
  j["schema"] = 1;
  j["field"] = spec.field.name();
  j["generators"] = spec.generators;
  j["complex"] = complex_to_json(spec.complex);
  if (spec.sigma) j["sigma"] = complex_to_json(*spec.sigma);
  if (spec.normality_box) j["normality_box"] = *spec.normality_box;
  return j.dump(2) + "\n";
}

}  // namespace cmlattice
