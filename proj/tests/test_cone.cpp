#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cmlattice/cone.hpp"
#include "cmlattice/error.hpp"
#include "cmlattice/fixtures.hpp"
#include "cmlattice/selfcheck.hpp"
#include "oracle.hpp"

using namespace cmlattice;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

oracle::Rows as_rows(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("square cone: facets, faces, simpliciality, normality") {
  const SemigroupCone cone = SemigroupCone::build(cone_fixture("square").generators);
  CHECK(cone.dimension() == 3);
  CHECK(cone.facet_normals().size() == 4);
  CHECK(cone.face_count() == 10);
  CHECK_FALSE(cone.is_simplicial());
  CHECK(verify_normality_bounded(cone, 3).consistent);
  CHECK(cone.faces_of_dim(1).size() == 4);
  CHECK(cone.faces_of_dim(2).size() == 4);
  CHECK(cone.face(cone.zero_face()).cone_dim == 0);
  CHECK(cone.face(cone.full_face()).cone_dim == 3);
}

TEST_CASE("orthants are simplicial with 2^d faces") {
  for (const char* name : {"orthant2", "orthant3", "orthant4"}) {
    const SemigroupCone cone = SemigroupCone::build(cone_fixture(name).generators);
    CHECK(cone.is_simplicial());
    CHECK(cone.face_count() == (std::size_t{1} << cone.dimension()));
    CHECK(cone.facet_normals().size() == cone.dimension());
  }
}

TEST_CASE("face lattice agrees with the functional-enumeration oracle") {
  for (const auto& fx : builtin_cones()) {
    CAPTURE(fx.name);
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    const auto expected = oracle::faces_by_functionals(as_rows(fx.generators), 3);
    std::map<std::vector<std::size_t>, std::size_t> got;
    for (const auto& f : cone.faces()) got[f.generator_set] = static_cast<std::size_t>(f.cone_dim);
    CHECK(got == expected);
  }
}

TEST_CASE("faces are ordered by cone dimension and covers have codimension one") {
  for (const auto& fx : builtin_cones()) {
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    for (std::size_t k = 1; k < cone.face_count(); ++k)
      CHECK(cone.face(k - 1).cone_dim <= cone.face(k).cone_dim);
    for (const auto& c : cone.covers()) {
      CHECK(cone.face(c.upper).cone_dim == cone.face(c.lower).cone_dim + 1);
      CHECK(cone.is_subface(c.lower, c.upper));
      CHECK((c.sign == 1 || c.sign == -1));
      CHECK(cone.incidence_sign(c.lower, c.upper) == c.sign);
    }
  }
}

TEST_CASE("interior points and the face-of-point map") {
  for (const auto& fx : builtin_cones()) {
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    for (const auto& f : cone.faces()) CHECK(cone.face_of_point(f.interior_point) == f.id);
    for (std::size_t g = 0; g < fx.generators.size(); ++g) {
      const auto& gens = cone.face(cone.face_of_point(fx.generators[g])).generator_set;
      CHECK(std::find(gens.begin(), gens.end(), g) != gens.end());
    }
  }
  const SemigroupCone sq = SemigroupCone::build(cone_fixture("square").generators);
  CHECK_FALSE(sq.contains({0, 0, -1}));
  CHECK(code_of([&] { (void)sq.face_of_point({0, 0, -1}); }) == ErrorCode::OutsideCone);
}

TEST_CASE("diamond identity holds with the chosen signs and breaks after a flip") {
  for (const auto& fx : builtin_cones()) {
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    const auto diamonds = length_two_intervals(cone);
    CHECK_FALSE(diamonds.empty());
    for (const auto& dm : diamonds) {
      REQUIRE(dm.middle.size() == 2);
      int sum = 0;
      for (FaceId m : dm.middle) sum += cone.incidence_sign(dm.bottom, m) * cone.incidence_sign(m, dm.top);
      CHECK(sum == 0);
    }
  }
  const SemigroupCone sq = SemigroupCone::build(cone_fixture("square").generators);
  const Cover c = sq.covers().back();
  const SemigroupCone bad = sq.with_flipped_sign(c.lower, c.upper);
  bool broken = false;
  for (const auto& dm : length_two_intervals(bad)) {
    int sum = 0;
    for (FaceId m : dm.middle) sum += bad.incidence_sign(dm.bottom, m) * bad.incidence_sign(m, dm.top);
    if (sum != 0) broken = true;
  }
  CHECK(broken);
}

TEST_CASE("input validation") {
  CHECK(code_of([] { (void)SemigroupCone::build({}); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { (void)SemigroupCone::build({{1, 0}, {0}}); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { (void)SemigroupCone::build({{1, 0}, {2, 0}}); }) == ErrorCode::LatticeNotFull);
  CHECK(code_of([] { (void)SemigroupCone::build({{1, 0}, {-1, 0}, {0, 1}}); }) == ErrorCode::NotPointed);
}

TEST_CASE("normality check finds the gap of a non-normal semigroup") {
  const SemigroupCone cone = SemigroupCone::build({{1, 0}, {1, 1}, {1, 3}});
  const NormalityVerdict v = verify_normality_bounded(cone, 3);
  CHECK_FALSE(v.consistent);
  REQUIRE(v.counterexample);
  CHECK(*v.counterexample == IntVector{1, 2});
  CHECK(verify_normality_bounded(SemigroupCone::build(cone_fixture("wedge").generators), 3).consistent);
}

TEST_CASE("psi membership examples") {
  const SemigroupCone o = SemigroupCone::build(cone_fixture("orthant3").generators);
  CHECK_FALSE(o.psi_membership({0, 0, 0}));
  CHECK_FALSE(o.psi_membership({1, 2, 0}));
  CHECK(o.psi_membership({-1, 0, 0}));
  CHECK(o.psi_membership({3, -1, 5}));
  const SemigroupCone sq = SemigroupCone::build(cone_fixture("square").generators);
  CHECK(sq.psi_membership({0, 0, -1}));
  const auto& normals = o.facet_normals();
  const auto x_facet = static_cast<std::size_t>(
      std::find(normals.begin(), normals.end(), IntVector{1, 0, 0}) - normals.begin());
  CHECK(o.supp_plus({1, -1, 0}) == IndexSet{x_facet});
}

TEST_CASE("property: psi membership matches the brute-force oracle on every fixture") {
  for (const auto& fx : builtin_cones()) {
    CAPTURE(fx.name);
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    const auto sums = oracle::semigroup_sums(as_rows(fx.generators), 4);
    const oracle::Rows normals = as_rows(cone.facet_normals());
    SampleRng rng(kSampleSeed);
    for (int k = 0; k < 100; ++k) {
      IntVector a(cone.dimension());
      for (auto& x : a) x = rng.in_range(-5, 5);
      CHECK(cone.psi_membership(a) == oracle::psi_brute(normals, sums, a));
    }
  }
}

TEST_CASE("property: on simplicial cones psi is the complement of the closed cone") {
  for (const auto& fx : builtin_cones()) {
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    if (!cone.is_simplicial()) continue;
    CAPTURE(fx.name);
    const std::size_t d = cone.dimension();
    IntVector a(d, -5);
    while (true) {
      CHECK(cone.psi_membership(a) == !cone.contains(a));
      std::size_t k = 0;
      while (k < d && a[k] == 5) a[k++] = -5;
      if (k == d) break;
      ++a[k];
    }
  }
}

TEST_CASE("non-simplicial negative control: psi differs from the complement somewhere") {
  // (-1,0,0) is outside the square cone, but -a is positive on one facet
  // only while every generator is positive on two.
  const SemigroupCone sq = SemigroupCone::build(cone_fixture("square").generators);
  CHECK_FALSE(sq.psi_membership({-1, 0, 0}));
  CHECK_FALSE(sq.contains({-1, 0, 0}));
  bool differs = false;
  for (std::int64_t x = -3; x <= 3; ++x)
    for (std::int64_t y = -3; y <= 3; ++y)
      for (std::int64_t z = -3; z <= 3; ++z)
        if (sq.psi_membership({x, y, z}) != !sq.contains({x, y, z})) differs = true;
  CHECK(differs);
}
