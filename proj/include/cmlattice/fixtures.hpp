#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmlattice/complexes.hpp"
#include "cmlattice/cone.hpp"

namespace cmlattice {

/// A named cone shipped with the library.
struct ConeFixture {
  std::string name;
  std::vector<IntVector> generators;
};

/// A named order ideal on one of the fixture cones; faces are given by
/// generator-index sets and closed downward.
struct ComplexFixture {
  std::string name;
  std::string cone;
  std::vector<IndexSet> seeds;
};

/// orthant2, orthant3, orthant4, square, pentagon, wedge.
const std::vector<ConeFixture>& builtin_cones();
const std::vector<ComplexFixture>& builtin_complexes();
const ConeFixture& cone_fixture(const std::string& name);
const ComplexFixture& complex_fixture(const std::string& name);

/// Resolves each generator-index set to the smallest face containing it.
OrderIdeal order_ideal_from_generator_sets(const SemigroupCone& cone,
                                           const std::vector<IndexSet>& seeds);

/// Deterministic across platforms: draws come straight from mt19937.
class SampleRng {
 public:
  explicit SampleRng(std::uint32_t seed) : engine_(seed) {}
  /// Uniform enough for sampling in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

 private:
  std::mt19937 engine_;
};

/// Downward closure of one to three random proper faces; occasionally the
/// whole face lattice.
OrderIdeal random_order_ideal(const SemigroupCone& cone, SampleRng& rng);

inline constexpr std::uint32_t kSampleSeed = 20240611;

}  // namespace cmlattice
