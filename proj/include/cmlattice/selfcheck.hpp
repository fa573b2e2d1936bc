#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cmlattice/cone.hpp"
#include "cmlattice/fixtures.hpp"
#include "cmlattice/linalg.hpp"

namespace cmlattice {

/// One invariant suite run on one subject (a cone, possibly with a field).
struct CheckOutcome {
  std::string suite;
  std::string subject;
  bool passed = true;
  std::size_t instances = 0;
  /// First failure diagnostic; empty when passed.
  std::string message;
};

struct SelfcheckSummary {
  std::vector<CheckOutcome> outcomes;
  /// Observations that are reported but never fail the run, such as a
  /// verdict that changes with the characteristic.
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
  void append(const SelfcheckSummary& other);
};

struct SelfcheckOptions {
  std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(32003)};
  std::size_t random_ideals = 20;
  std::size_t psi_samples = 100;
  std::int64_t psi_box = 5;
  std::int64_t normality_box = 3;
  std::uint32_t seed = kSampleSeed;
};

/// Runs every invariant suite on `cone`, on Delta = the whole face lattice,
/// on `extra` order ideals (generator-index seeds) and on random order
/// ideals. Failures are recorded, never thrown.
SelfcheckSummary selfcheck_cone(const SemigroupCone& cone, const std::string& name,
                                const SelfcheckOptions& options,
                                const std::vector<std::vector<IndexSet>>& extra = {});

/// All builtin cones together with the builtin complexes on them.
SelfcheckSummary selfcheck_builtin(const SelfcheckOptions& options);

/// Sums of at most `max_terms` generators, nonzero, without repetition.
std::vector<IntVector> small_semigroup_elements(const SemigroupCone& cone, int max_terms);
/// Membership in Psi decided from an explicit list of semigroup elements.
bool psi_membership_by_elements(const SemigroupCone& cone, const std::vector<IntVector>& elements,
                                const IntVector& a);

}  // namespace cmlattice
