#include "cmlattice/fixtures.hpp"

#include "cmlattice/error.hpp"

namespace cmlattice {

const std::vector<ConeFixture>& builtin_cones() {
  static const std::vector<ConeFixture> cones = {
      {"orthant2", {{1, 0}, {0, 1}}},
      {"orthant3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      {"orthant4", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {"square", {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 0, 1}}},
      // Every lattice pentagon has an interior lattice point; listing it
      // keeps the semigroup normal.
      {"pentagon", {{0, 0, 1}, {1, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 1, 1}, {1, 1, 1}}},
      {"wedge", {{1, 0}, {1, 1}, {1, 2}}},
  };
  return cones;
}

const std::vector<ComplexFixture>& builtin_complexes() {
  static const std::vector<ComplexFixture> complexes = {
      {"square_boundary", "square", {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {"square_edge", "square", {{0, 1}}},
      {"xy_orthant2", "orthant2", {{0}, {1}}},
      {"triangle_pendant", "orthant4", {{0, 1, 2}, {0, 3}}},
      {"two_disjoint_edges", "orthant4", {{0, 1}, {2, 3}}},
      {"edge_vertex", "orthant3", {{0, 1}, {2}}},
      {"pentagon_boundary", "pentagon", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
  };
  return complexes;
}

const ConeFixture& cone_fixture(const std::string& name) {
  for (const auto& c : builtin_cones())
    if (c.name == name) return c;
  throw Error(ErrorCode::ValidationError, "unknown cone fixture '" + name + "'", "unknown-fixture");
}

const ComplexFixture& complex_fixture(const std::string& name) {
  for (const auto& c : builtin_complexes())
    if (c.name == name) return c;
  throw Error(ErrorCode::ValidationError, "unknown complex fixture '" + name + "'",
              "unknown-fixture");
}

OrderIdeal order_ideal_from_generator_sets(const SemigroupCone& cone,
                                           const std::vector<IndexSet>& seeds) {
  std::vector<FaceId> faces;
  for (const auto& s : seeds) {
    for (std::size_t g : s)
      if (g >= cone.generators().size())
        throw Error(ErrorCode::ValidationError,
                    "generator index " + std::to_string(g) + " out of range", "bad-generator-index");
    faces.push_back(cone.face_spanned_by(s));
  }
  return OrderIdeal::from_seeds(cone, faces);
}

OrderIdeal random_order_ideal(const SemigroupCone& cone, SampleRng& rng) {
  if (rng.below(10) == 0 || cone.face_count() <= 2) return OrderIdeal::whole(cone);
  const std::size_t proper = cone.face_count() - 2;
  std::vector<FaceId> seeds;
  const std::size_t count = 1 + rng.below(3);
  for (std::size_t k = 0; k < count; ++k) seeds.push_back(1 + rng.below(proper));
  return OrderIdeal::from_seeds(cone, seeds);
}

}  // namespace cmlattice
