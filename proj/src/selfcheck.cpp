#include "cmlattice/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cmlattice/analysis.hpp"
#include "cmlattice/complexes.hpp"
#include "cmlattice/error.hpp"

namespace cmlattice {

bool SelfcheckSummary::passed() const { return failures() == 0; }

std::size_t SelfcheckSummary::failures() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return !o.passed; }));
}

void SelfcheckSummary::append(const SelfcheckSummary& other) {
  outcomes.insert(outcomes.end(), other.outcomes.begin(), other.outcomes.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::vector<IntVector> small_semigroup_elements(const SemigroupCone& cone, int max_terms) {
  const auto& gens = cone.generators();
  std::set<IntVector> seen;
  std::vector<IntVector> frontier = {IntVector(cone.dimension(), 0)};
  for (int step = 0; step < max_terms; ++step) {
    std::vector<IntVector> next;
    for (const auto& base : frontier)
      for (const auto& g : gens) {
        IntVector v = base;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += g[k];
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool psi_membership_by_elements(const SemigroupCone& cone, const std::vector<IntVector>& elements,
                                const IntVector& a) {
  IntVector neg(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
  const IndexSet target = cone.supp_plus(neg);
  for (const auto& c : elements) {
    const IndexSet s = cone.supp_plus(c);
    if (std::includes(target.begin(), target.end(), s.begin(), s.end())) return true;
  }
  return false;
}

namespace {

std::string describe(const IntVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

std::string describe_faces(const OrderIdeal& delta) {
  std::string out = "{";
  bool first = true;
  for (FaceId f : delta.faces()) {
    if (f == delta.cone().zero_face()) continue;
    const auto& g = delta.cone().face(f).generator_set;
    if (!first) out += " ";
    first = false;
    for (std::size_t k = 0; k < g.size(); ++k) out += (k ? "," : "") + std::to_string(g[k]);
  }
  return out + "}";
}

/// Accumulates instances of one suite on one subject.
class Recorder {
 public:
  Recorder(SelfcheckSummary& summary, std::string subject)
      : summary_(summary), subject_(std::move(subject)) {}

  /// Runs `body`; a false return or a library error counts as a failure.
  void check(const std::string& suite, const std::function<bool(std::string&)>& body) {
    CheckOutcome& o = slot(suite);
    ++o.instances;
    std::string message;
    bool ok = false;
    try {
      ok = body(message);
    } catch (const Error& e) {
      message = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    if (!ok && o.passed) {
      o.passed = false;
      o.message = message.empty() ? "check failed" : message;
    }
  }

 private:
  CheckOutcome& slot(const std::string& suite) {
    for (auto& o : summary_.outcomes)
      if (o.suite == suite && o.subject == subject_) return o;
    summary_.outcomes.push_back({suite, subject_, true, 0, {}});
    return summary_.outcomes.back();
  }

  SelfcheckSummary& summary_;
  std::string subject_;
};

void check_geometry(const SemigroupCone& cone, const SelfcheckOptions& options, Recorder& rec) {
  rec.check("saturation", [&](std::string& msg) {
    for (const Face& f : cone.faces()) {
      IndexSet gens, zeros;
      for (std::size_t g = 0; g < cone.generators().size(); ++g) {
        bool on = true;
        for (std::size_t h : f.facet_zero_set) on = on && cone.evaluate(h, cone.generators()[g]) == 0;
        if (on) gens.push_back(g);
      }
      for (std::size_t h = 0; h < cone.facet_normals().size(); ++h) {
        bool vanish = true;
        for (std::size_t g : f.generator_set) vanish = vanish && cone.evaluate(h, cone.generators()[g]) == 0;
        if (vanish) zeros.push_back(h);
      }
      if (gens != f.generator_set || zeros != f.facet_zero_set) {
        msg = "face " + std::to_string(f.id) + " is not saturated";
        return false;
      }
    }
    return true;
  });
  rec.check("face-of-point", [&](std::string& msg) {
    for (const Face& f : cone.faces())
      if (cone.face_of_point(f.interior_point) != f.id) {
        msg = "interior point " + describe(f.interior_point) + " maps to another face";
        return false;
      }
    return true;
  });
  rec.check("facet-count", [&](std::string& msg) {
    const auto facets = cone.faces_of_dim(static_cast<int>(cone.dimension()) - 1).size();
    msg = std::to_string(facets) + " faces of codimension one, " +
          std::to_string(cone.facet_normals().size()) + " normals";
    return facets == cone.facet_normals().size();
  });
  rec.check("diamond-identity", [&](std::string& msg) {
    for (const Diamond& dm : length_two_intervals(cone)) {
      if (dm.middle.size() != 2) {
        msg = "interval with " + std::to_string(dm.middle.size()) + " middle faces";
        return false;
      }
      const int s = cone.incidence_sign(dm.middle[0], dm.top) * cone.incidence_sign(dm.bottom, dm.middle[0]) +
                    cone.incidence_sign(dm.middle[1], dm.top) * cone.incidence_sign(dm.bottom, dm.middle[1]);
      if (s != 0) {
        msg = "incidence signs violate the diamond identity between faces " + std::to_string(dm.bottom) +
              " and " + std::to_string(dm.top);
        return false;
      }
    }
    return true;
  });
  rec.check("psi-oracle", [&](std::string& msg) {
    const auto elements = small_semigroup_elements(cone, 4);
    SampleRng rng(options.seed);
    for (std::size_t k = 0; k < options.psi_samples; ++k) {
      IntVector a(cone.dimension());
      for (auto& x : a) x = rng.in_range(-options.psi_box, options.psi_box);
      if (cone.psi_membership(a) != psi_membership_by_elements(cone, elements, a)) {
        msg = "generator reduction disagrees with brute force at " + describe(a);
        return false;
      }
    }
    return true;
  });
  if (cone.is_simplicial()) {
    rec.check("psi-simplicial", [&](std::string& msg) {
      const std::int64_t b = options.psi_box;
      IntVector a(cone.dimension(), -b);
      while (true) {
        if (cone.psi_membership(a) == cone.contains(a)) {
          msg = "membership in Psi is not the complement of the cone at " + describe(a);
          return false;
        }
        std::size_t k = 0;
        while (k < a.size() && a[k] == b) a[k++] = -b;
        if (k == a.size()) break;
        ++a[k];
      }
      return true;
    });
  }
  rec.check("normality-bounded", [&](std::string& msg) {
    const auto v = verify_normality_bounded(cone, options.normality_box);
    if (v.counterexample) msg = "lattice point " + describe(*v.counterexample) + " is not generated";
    return v.consistent;
  });
}

/// Verdicts compared across fields.
struct Fingerprint {
  bool cm;
  bool seqcm;
  bool gorenstein;
  std::vector<std::size_t> local_coh0;
  bool operator==(const Fingerprint&) const = default;
};

void check_order_ideal(const OrderIdeal& delta, const Field& field, Recorder& rec,
                       std::map<std::string, std::vector<std::pair<std::string, Fingerprint>>>& prints) {
  const SemigroupCone& cone = delta.cone();
  const int d = static_cast<int>(cone.dimension());
  const SqModule ring = face_ring(delta, field);
  const std::string label = describe_faces(delta);

  rec.check("d-squared-zero", [&](std::string&) {
    for (FaceId f = 0; f < cone.face_count(); ++f) (void)ext_complex(ring, f);
    (void)sheaf_cochain(ring);
    return true;
  });
  rec.check("euler-characteristic", [&](std::string& msg) {
    for (FaceId f = 0; f < cone.face_count(); ++f) {
      const CochainComplex c = ext_complex(ring, f);
      if (cohomology(c).euler_characteristic() != c.euler_characteristic()) {
        msg = "Euler characteristic mismatch on " + label;
        return false;
      }
    }
    const CochainComplex s = sheaf_cochain(ring);
    return cohomology(s).euler_characteristic() == s.euler_characteristic();
  });
  rec.check("ext-functoriality", [&](std::string&) {
    (void)ext_modules(ring);
    return true;
  });

  AnalysisReport rep;
  bool analysed = false;
  rec.check("seqcm-three-routes", [&](std::string& msg) {
    const SeqCmVerdict v = seq_cm_routes(delta, field);
    if (!v.agree()) {
      msg = "routes disagree on " + label;
      return false;
    }
    return true;
  });
  rec.check("local-coh0-dual-route", [&](std::string&) {
    (void)local_cohomology_deg0(ring);
    return true;
  });
  rec.check("report-consistency", [&](std::string& msg) {
    rep = analyze_face_ring(delta, field);
    analysed = true;
    if (rep.depth && rep.dimension && *rep.depth > *rep.dimension) {
      msg = "depth exceeds dimension on " + label;
      return false;
    }
    if (rep.depth && rep.cm != (*rep.depth == *rep.dimension)) {
      msg = "cm disagrees with depth = dim on " + label;
      return false;
    }
    if (rep.cm && !rep.seqcm) {
      msg = "cm without seqcm on " + label;
      return false;
    }
    if (*rep.gorenstein_star && !rep.cm) {
      msg = "Gorenstein* without cm on " + label;
      return false;
    }
    if (rep.finite_length.buchsbaum != rep.finite_length.gcm) {
      msg = "Buchsbaum and gcm differ on " + label;
      return false;
    }
    return true;
  });
  rec.check("ext-nonvanishing", [&](std::string& msg) {
    const auto exts = ext_modules(ring);
    int first = -1;
    for (int j = 0; j <= d && first < 0; ++j)
      if (!exts[static_cast<std::size_t>(j)].is_zero()) first = j;
    const int want = d - *module_dimension(ring);
    msg = "first nonzero Ext is " + std::to_string(first) + ", expected " + std::to_string(want) + " on " + label;
    return first == want;
  });
  rec.check("skeleton-cm", [&](std::string& msg) {
    if (!is_cohen_macaulay(ring)) return true;
    for (int i = -1; i <= delta.dimension(); ++i)
      if (!is_cohen_macaulay(face_ring(delta.skeleton(i), field))) {
        msg = "skeleton " + std::to_string(i) + " of the Cohen-Macaulay " + label + " is not Cohen-Macaulay";
        return false;
      }
    return true;
  });
  rec.check("regularize", [&](std::string& msg) {
    const SqModule reg = regularize(ring);
    if (regularize(reg).value_dims() != reg.value_dims()) {
      msg = "regularize is not idempotent on " + label;
      return false;
    }
    const auto before = ext_modules(ring);
    const auto after = ext_modules(reg);
    for (int j = 0; j <= d; ++j)
      for (FaceId f = 1; f < cone.face_count(); ++f)
        if (before[static_cast<std::size_t>(j)].value_dim(f) != after[static_cast<std::size_t>(j)].value_dim(f)) {
          msg = "regularize changed Ext^" + std::to_string(j) + " away from degree 0 on " + label;
          return false;
        }
    const auto lc = local_cohomology_deg0(reg);
    if (lc.dims[0] != 0 || lc.dims[1] != 0) {
      msg = "regularized module has nonzero degree-0 H^0 or H^1 on " + label;
      return false;
    }
    return true;
  });
  rec.check("pair-term-dims", [&](std::string& msg) {
    if (delta.dimension() < 1) return true;
    const OrderIdeal sigma = delta.skeleton(delta.dimension() - 1);
    if (sigma.size() == 1) return true;
    const IdealPair pair(delta, sigma);
    const SqModule m = pair_module(pair, field);
    for (FaceId f = 0; f < cone.face_count(); ++f) {
      const CochainComplex c = ext_complex(m, f);
      for (int i = 0; i <= d; ++i) {
        std::size_t count = 0;
        for (FaceId g : pair.difference())
          if (cone.face(g).cone_dim == d - i && cone.is_subface(f, g)) ++count;
        if (c.dim(i) != count) {
          msg = "pair complex term " + std::to_string(i) + " has the wrong size on " + label;
          return false;
        }
      }
    }
    return true;
  });
  if (analysed) {
    prints[label].push_back(
        {field.name(), Fingerprint{rep.cm, rep.seqcm, *rep.gorenstein_star, rep.local_coh0.dims}});
  }
}

void check_difference_only(const OrderIdeal& delta, const OrderIdeal& other, const Field& field,
                           Recorder& rec) {
  const SemigroupCone& cone = delta.cone();
  std::vector<FaceId> meet_faces, join_faces;
  for (FaceId f = 0; f < cone.face_count(); ++f) {
    if (delta.contains(f) && other.contains(f)) meet_faces.push_back(f);
    if (delta.contains(f) || other.contains(f)) join_faces.push_back(f);
  }
  const OrderIdeal sigma = OrderIdeal::from_faces(cone, meet_faces);
  if (sigma.size() == 1 || other.size() == 1 || sigma == delta) return;
  rec.check("difference-only", [&](std::string& msg) {
    const IdealPair first(delta, sigma);
    const IdealPair second(OrderIdeal::from_faces(cone, join_faces), other);
    if (first.difference() != second.difference()) {
      msg = "constructed pairs have different differences";
      return false;
    }
    const SqModule a = pair_module(first, field);
    const SqModule b = pair_module(second, field);
    for (FaceId f : first.difference())
      if (cohomology(ext_complex(a, f)).dims() != cohomology(ext_complex(b, f)).dims()) {
        msg = "pairs with equal differences have different cohomology";
        return false;
      }
    return true;
  });
}

}  // namespace

SelfcheckSummary selfcheck_cone(const SemigroupCone& cone, const std::string& name,
                                const SelfcheckOptions& options,
                                const std::vector<std::vector<IndexSet>>& extra) {
  SelfcheckSummary summary;
  {
    Recorder rec(summary, name);
    check_geometry(cone, options, rec);
  }
  std::map<std::string, std::vector<std::pair<std::string, Fingerprint>>> prints;
  for (const Field& field : options.fields) {
    Recorder rec(summary, name + " over " + field.name());
    rec.check("normal-ring-cm", [&](std::string& msg) {
      msg = "K[C] is not Cohen-Macaulay";
      return is_cohen_macaulay(face_ring(OrderIdeal::whole(cone), field));
    });
    std::vector<OrderIdeal> ideals;
    ideals.push_back(OrderIdeal::whole(cone));
    rec.check("fixture-complexes", [&](std::string&) {
      for (const auto& seeds : extra) ideals.push_back(order_ideal_from_generator_sets(cone, seeds));
      return true;
    });
    SampleRng rng(options.seed);
    for (std::size_t k = 0; k < options.random_ideals; ++k) ideals.push_back(random_order_ideal(cone, rng));
    for (const auto& delta : ideals) check_order_ideal(delta, field, rec, prints);
    for (std::size_t k = 0; k + 1 < ideals.size(); ++k)
      check_difference_only(ideals[k], ideals[k + 1], field, rec);
  }
  for (const auto& [label, by_field] : prints) {
    for (std::size_t k = 1; k < by_field.size(); ++k)
      if (!(by_field[k].second == by_field[0].second)) {
        summary.notes.push_back(name + " " + label + ": verdicts over " + by_field[k].first +
                                " differ from " + by_field[0].first);
        break;
      }
  }
  return summary;
}

SelfcheckSummary selfcheck_builtin(const SelfcheckOptions& options) {
  SelfcheckSummary summary;
  for (const auto& fixture : builtin_cones()) {
    std::vector<std::vector<IndexSet>> extra;
    for (const auto& cx : builtin_complexes())
      if (cx.cone == fixture.name) extra.push_back(cx.seeds);
    SemigroupCone cone = SemigroupCone::build(fixture.generators);
    summary.append(selfcheck_cone(cone, fixture.name, options, extra));
  }
  return summary;
}

}  // namespace cmlattice
