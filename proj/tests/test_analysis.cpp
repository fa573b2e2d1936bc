#include <doctest.h>

#include "bridge.hpp"
#include "cmlattice/analysis.hpp"
#include "cmlattice/error.hpp"
#include "cmlattice/fixtures.hpp"

using namespace cmlattice;

namespace {

const Field Q = Field::rationals();
const std::vector<Field> kFields = {Field::rationals(), Field::prime(2), Field::prime(32003)};

struct Named {
  SemigroupCone cone;
  OrderIdeal delta;
  explicit Named(const std::string& complex)
      : cone(SemigroupCone::build(cone_fixture(complex_fixture(complex).cone).generators)),
        delta(order_ideal_from_generator_sets(cone, complex_fixture(complex).seeds)) {}
  Named(const Named&) = delete;
};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("normal semigroup rings are Cohen-Macaulay") {
  for (const auto& fx : builtin_cones()) {
    CAPTURE(fx.name);
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    const AnalysisReport r = analyze_face_ring(OrderIdeal::whole(cone), Q);
    CHECK(r.cm);
    CHECK(r.dimension == static_cast<int>(cone.dimension()));
    CHECK(r.depth == static_cast<int>(cone.dimension()));
    CHECK(r.seqcm);
    CHECK(r.gorenstein_star == std::optional<bool>(false));
  }
}

TEST_CASE("worked verdicts on named complexes") {
  {
    Named n("square_boundary");
    const AnalysisReport r = analyze_face_ring(n.delta, Q);
    CHECK(r.cm);
    CHECK(r.gorenstein_star == std::optional<bool>(true));
    CHECK(r.dimension == 2);
  }
  {
    Named n("pentagon_boundary");
    CHECK(is_gorenstein_star(n.delta, Q));
  }
  {
    Named n("xy_orthant2");
    const AnalysisReport r = analyze_face_ring(n.delta, Q);
    CHECK(r.gorenstein_star == std::optional<bool>(true));
    CHECK(r.local_coh0.dims == std::vector<std::size_t>{0, 1, 0});
  }
  {
    Named n("triangle_pendant");
    const AnalysisReport r = analyze_face_ring(n.delta, Q);
    CHECK_FALSE(r.cm);
    CHECK(r.seqcm);
    REQUIRE(r.seqcm_routes);
    CHECK(r.seqcm_routes->agree());
  }
  {
    Named n("two_disjoint_edges");
    const AnalysisReport r = analyze_face_ring(n.delta, Q);
    CHECK_FALSE(r.seqcm);
    CHECK(r.depth == 1);
    CHECK(r.finite_length.gcm);
    CHECK(r.finite_length.buchsbaum);
    CHECK(r.serre_max == std::optional<std::optional<int>>(1));
  }
  {
    Named n("edge_vertex");
    const AnalysisReport r = analyze_face_ring(n.delta, Q);
    CHECK_FALSE(r.finite_length.gcm);
    CHECK_FALSE(r.cm);
  }
}

TEST_CASE("linear strand profiles") {
  {
    Named n("triangle_pendant");
    std::vector<int> nonzero;
    for (const auto& s : linear_strand_profile(face_ring(n.delta, Q)))
      if (s.nonzero()) {
        nonzero.push_back(s.strand);
        CHECK(s.acyclic);
      }
    CHECK(nonzero == std::vector<int>{2, 3});
  }
  {
    Named n("two_disjoint_edges");
    const auto strands = linear_strand_profile(face_ring(n.delta, Q));
    CHECK_FALSE(strands.at(1).acyclic);
    CHECK(strands.at(2).acyclic);
  }
  {
    Named n("square_boundary");
    for (const auto& s : linear_strand_profile(face_ring(n.delta, Q))) {
      CHECK(s.acyclic);
      CHECK(s.nonzero() == (s.strand == 2));
    }
  }
}

TEST_CASE("nu tables of the ring and of a canonical-module pair") {
  const SemigroupCone sq = SemigroupCone::build(cone_fixture("square").generators);
  const NuTable ring = nu_table(face_ring(OrderIdeal::whole(sq), Q));
  REQUIRE(ring.entries().size() == 1);
  CHECK(ring.get(0, sq.full_face()) == 1);

  const OrderIdeal boundary = order_ideal_from_generator_sets(sq, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const IdealPair omega(OrderIdeal::whole(sq), boundary);
  CHECK(is_cm_pair(omega, Q));
  CHECK(code_of([&] { (void)is_cm_pair(IdealPair(boundary, boundary), Q); }) == ErrorCode::EmptyDifference);
  CHECK(code_of([&] { (void)depth(SqModule::zero(sq, Q)); }) == ErrorCode::ZeroModule);
  CHECK_FALSE(module_dimension(SqModule::zero(sq, Q)));
}

TEST_CASE("abstract nu-table analyzer") {
  const std::vector<AbstractNuEntry> table = {{0, 2, 1, true}, {1, 0, 1, true}};
  const AbstractNuReport r = analyze_nu_table(table, 2, true);
  CHECK(r.depth == 1);
  CHECK_FALSE(r.cm);
  CHECK(r.gcm);
  CHECK(r.buchsbaum_sufficient);
  CHECK(r.serre_max == std::optional<int>(1));
  CHECK(code_of([&] { (void)analyze_nu_table(table, 2, false); }) == ErrorCode::ValidationError);
  CHECK(code_of([&] { (void)analyze_nu_table({}, 2, true); }) == ErrorCode::EmptyTable);

  const AbstractNuReport cm = analyze_nu_table({{0, 3, 1, true}, {1, 2, 4, true}}, 3, true);
  CHECK(cm.cm);
  CHECK_FALSE(cm.serre_max);

  const AbstractNuReport primary = analyze_nu_table({{0, 2, 1, true}, {1, 0, 1, false}}, 2, true);
  CHECK(primary.gcm);
  CHECK_FALSE(primary.buchsbaum_sufficient);
}

TEST_CASE("property: face-ring verdicts match the simplicial oracle on orthants over every field") {
  for (const char* name : {"orthant3", "orthant4"}) {
    const SemigroupCone cone = SemigroupCone::build(cone_fixture(name).generators);
    SampleRng rng(kSampleSeed);
    for (int k = 0; k < 20; ++k) {
      const OrderIdeal delta = random_order_ideal(cone, rng);
      const oracle::Complex ref = bridge::to_oracle(delta);
      for (const Field& f : kFields) {
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(f.name());
        const std::int64_t p = bridge::oracle_prime(f);
        const AnalysisReport r = analyze_face_ring(delta, f);
        CHECK(r.depth == ref.depth(p));
        CHECK(r.cm == ref.cohen_macaulay(p));
        CHECK(r.seqcm == ref.sequentially_cm(p));
        CHECK(r.gorenstein_star == std::optional<bool>(ref.gorenstein_star(p)));
        CHECK(r.local_coh0.dims == ref.local_coh0(p));
        CHECK(r.finite_length.gcm == ref.generalized_cm(p));
        for (int i = 0; i <= ref.n; ++i)
          CHECK(r.finite_length.finite_length[static_cast<std::size_t>(i)] == ref.finite_length(i, p));
        const int serre = ref.serre_max(p);
        REQUIRE(r.serre_max);
        CHECK(*r.serre_max == (serre < 0 ? std::nullopt : std::optional<int>(serre)));
      }
    }
  }
}

TEST_CASE("property: report invariants on random complexes over every cone") {
  for (const auto& fx : builtin_cones()) {
    const SemigroupCone cone = SemigroupCone::build(fx.generators);
    SampleRng rng(kSampleSeed + 7);
    for (int k = 0; k < 10; ++k) {
      const OrderIdeal delta = random_order_ideal(cone, rng);
      const AnalysisReport r = analyze_face_ring(delta, Q);
      CAPTURE(fx.name);
      CAPTURE(k);
      REQUIRE(r.depth);
      REQUIRE(r.dimension);
      CHECK(*r.depth <= *r.dimension);
      CHECK(r.cm == (*r.depth == *r.dimension));
      if (r.cm) CHECK(r.seqcm);
      if (r.gorenstein_star.value_or(false)) CHECK(r.cm);
      CHECK(r.finite_length.buchsbaum == r.finite_length.gcm);
      CHECK(r.seqcm_routes->agree());
      CHECK(r.cm == !r.serre_max->has_value());
      if (r.cm)
        for (int i = -1; i <= delta.dimension(); ++i) CHECK(is_cohen_macaulay(face_ring(delta.skeleton(i), Q)));
      // Acyclicity of every strand is sequential Cohen-Macaulayness.
      bool all_acyclic = true;
      for (const auto& s : r.strands) all_acyclic = all_acyclic && s.acyclic;
      CHECK(all_acyclic == r.seqcm);
    }
  }
}

TEST_CASE("property: the abstract analyzer agrees with direct verdicts on simplicial cones") {
  for (const char* name : {"orthant2", "orthant3", "orthant4", "wedge"}) {
    const SemigroupCone cone = SemigroupCone::build(cone_fixture(name).generators);
    if (!cone.is_simplicial()) continue;
    SampleRng rng(kSampleSeed + 3);
    for (int k = 0; k < 15; ++k) {
      const OrderIdeal delta = random_order_ideal(cone, rng);
      const SqModule m = face_ring(delta, Q);
      const AnalysisReport r = analyze_module(m);
      const AbstractNuReport a = analyze_nu_table(abstract_nu_table(m), *r.dimension, true);
      CAPTURE(name);
      CAPTURE(k);
      CHECK(a.depth == *r.depth);
      CHECK(a.cm == r.cm);
      CHECK(a.serre_max == serre_max(delta, Q));
      CHECK(a.gcm == r.finite_length.gcm);
    }
  }
}
