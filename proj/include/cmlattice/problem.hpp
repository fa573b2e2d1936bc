#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmlattice/complexes.hpp"
#include "cmlattice/cone.hpp"
#include "cmlattice/linalg.hpp"

namespace cmlattice {

/// How an order ideal is described in a problem file.
struct ComplexSpec {
  enum class Kind { All, Seeds, Exponents };
  Kind kind = Kind::All;
  /// Generator-index sets, each naming the smallest face containing them.
  std::vector<IndexSet> seeds;
  std::vector<IntVector> exponents;

  bool operator==(const ComplexSpec&) const = default;
};

struct ProblemSpec {
  Field field = Field::rationals();
  std::vector<IntVector> generators;
  ComplexSpec complex;
  std::optional<ComplexSpec> sigma;
  std::optional<std::int64_t> normality_box;

  bool operator==(const ProblemSpec&) const = default;
};

/// A problem with its cone built and its order ideals resolved. The cone
/// lives on the heap so the order ideals stay valid when this is moved.
struct ResolvedProblem {
  ProblemSpec spec;
  std::unique_ptr<SemigroupCone> cone;
  std::optional<OrderIdeal> delta;
  std::optional<OrderIdeal> sigma;
};

/// Parses and fully validates a schema-1 JSON problem document.
/// Errors: ParseError (with line and column), ValidationError (with the
/// offending field path and a machine-readable detail), and the cone
/// construction errors.
ProblemSpec parse_problem(std::string_view text);
ResolvedProblem resolve_problem(const ProblemSpec& spec);
std::string problem_to_json(const ProblemSpec& spec);

OrderIdeal resolve_complex(const SemigroupCone& cone, const ComplexSpec& spec);

}  // namespace cmlattice
