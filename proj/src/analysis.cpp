#include "cmlattice/analysis.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cmlattice/error.hpp"

namespace cmlattice {

void NuTable::set(int i, FaceId f, std::size_t multiplicity) {
  if (multiplicity == 0)
    entries_.erase({i, f});
  else
    entries_[{i, f}] = multiplicity;
}

std::size_t NuTable::get(int i, FaceId f) const {
  const auto it = entries_.find({i, f});
  return it == entries_.end() ? 0 : it->second;
}

bool StrandVerdict::nonzero() const {
  return std::any_of(term_dims.begin(), term_dims.end(), [](std::size_t v) { return v > 0; });
}

namespace {

int cone_dim(const SemigroupCone& cone, FaceId f) { return cone.face(f).cone_dim; }

bool supported_only_at_zero(const SqModule& m) {
  for (FaceId f = 0; f < m.cone().face_count(); ++f)
    if (f != m.cone().zero_face() && m.value_dim(f) > 0) return false;
  return true;
}

bool cm_of_dimension(const SqModule& m, int want) {
  if (m.is_zero()) return true;
  return module_dimension(m) == want && is_cohen_macaulay(m);
}

bool seq_cm_from_exts(const std::vector<SqModule>& exts, int d) {
  for (int j = 0; j <= d; ++j)
    if (!cm_of_dimension(exts[static_cast<std::size_t>(j)], d - j)) return false;
  return true;
}

FiniteLengthProfile profile_from_exts(const SqModule& m, const std::vector<SqModule>& exts) {
  const int d = static_cast<int>(m.cone().dimension());
  FiniteLengthProfile out;
  for (int i = 0; i <= d; ++i)
    out.finite_length.push_back(supported_only_at_zero(exts[static_cast<std::size_t>(d - i)]));
  const int p = module_dimension(m).value_or(0);
  for (int i = 0; i < p; ++i)
    if (!out.finite_length[static_cast<std::size_t>(i)]) out.gcm = false;
  out.buchsbaum = out.gcm;
  return out;
}

std::vector<StrandVerdict> strands_from(const SqModule& m, const NuTable& nu,
                                        const std::vector<SqModule>& exts) {
  const SemigroupCone& cone = m.cone();
  const int d = static_cast<int>(cone.dimension());
  std::vector<StrandVerdict> out;
  for (int l = 0; l <= d; ++l) {
    StrandVerdict sv;
    sv.strand = l;
    sv.term_dims.assign(static_cast<std::size_t>(l) + 1, 0);
    for (const auto& [key, mult] : nu.entries()) {
      const auto [i, f] = key;
      if (i <= l && cone_dim(cone, f) == l - i) sv.term_dims[static_cast<std::size_t>(i)] += mult;
    }
    sv.acyclic = cm_of_dimension(exts[static_cast<std::size_t>(d - l)], l);
    out.push_back(std::move(sv));
  }
  return out;
}

/// Smallest i with an entry violating the (S_n) vanishing pattern; nullopt
/// when there is none.
std::optional<int> first_serre_violation(const SqModule& m, const NuTable& nu) {
  const int p = module_dimension(m).value_or(0);
  std::optional<int> first;
  for (const auto& [key, mult] : nu.entries()) {
    const auto [i, f] = key;
    if (cone_dim(m.cone(), f) != p - i && (!first || i < *first)) first = i;
  }
  return first;
}

std::optional<int> serre_from_violation(std::optional<int> first) {
  if (!first) return std::nullopt;
  return std::max(*first, 1);
}

/// `exts` is only consulted when dim|Delta| >= 1.
bool gorenstein_from(const OrderIdeal& delta, bool cm, const std::vector<SqModule>& exts) {
  const SemigroupCone& cone = delta.cone();
  const int r = delta.dimension();
  if (r == -1) return true;
  if (r == 0) {
    const auto vertices = std::count_if(cone.faces().begin(), cone.faces().end(), [&](const Face& f) {
      return f.cone_dim == 1 && delta.contains(f.id);
    });
    return vertices == 2;
  }
  if (!cm) return false;
  const int d = static_cast<int>(cone.dimension());
  const SqModule& canonical = exts[static_cast<std::size_t>(d - (r + 1))];
  for (FaceId f : delta.faces())
    if (canonical.value_dim(f) != 1) return false;
  return true;
}

AnalysisReport analyze_with_exts(const SqModule& m, const std::vector<SqModule>& exts) {
  AnalysisReport rep;
  const int d = static_cast<int>(m.cone().dimension());
  rep.nu = nu_table(m);
  rep.dimension = module_dimension(m);
  if (rep.dimension) {
    int best = std::numeric_limits<int>::max();
    const int p = *rep.dimension;
    for (const auto& [key, mult] : rep.nu.entries()) {
      const int t = cone_dim(m.cone(), key.second);
      best = std::min(best, t + key.first);
      if (t != p - key.first) rep.cm = false;
      rep.ir_dim = std::max(rep.ir_dim.value_or(key.first), key.first);
    }
    rep.depth = best;
  }
  rep.finite_length = profile_from_exts(m, exts);
  rep.seqcm = seq_cm_from_exts(exts, d);
  rep.local_coh0 = local_cohomology_deg0(m);
  rep.strands = strands_from(m, rep.nu, exts);
  return rep;
}

}  // namespace

NuTable nu_table(const SqModule& m) {
  const SemigroupCone& cone = m.cone();
  const int d = static_cast<int>(cone.dimension());
  NuTable table;
  for (const Face& face : cone.faces()) {
    const CohomologyProfile h = cohomology(ext_complex(m, face.id));
    for (int i = 0; i <= d; ++i) {
      const int j = d - i - face.cone_dim;
      if (j >= 0) table.set(i, face.id, h.dim(j));
    }
  }
  return table;
}

std::optional<int> module_dimension(const SqModule& m) {
  std::optional<int> best;
  for (const Face& f : m.cone().faces())
    if (m.value_dim(f.id) > 0) best = std::max(best.value_or(f.cone_dim), f.cone_dim);
  return best;
}

int depth(const SqModule& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroModule, "depth of the zero module");
  int best = std::numeric_limits<int>::max();
  const NuTable table = nu_table(m);
  for (const auto& [key, mult] : table.entries())
    best = std::min(best, cone_dim(m.cone(), key.second) + key.first);
  return best;
}

bool is_cohen_macaulay(const SqModule& m) {
  if (m.is_zero()) return true;
  const int p = *module_dimension(m);
  const NuTable table = nu_table(m);
  for (const auto& [key, mult] : table.entries())
    if (cone_dim(m.cone(), key.second) != p - key.first) return false;
  return true;
}

bool is_cm_pair(const IdealPair& pair, const Field& field) {
  if (pair.difference().empty())
    throw Error(ErrorCode::EmptyDifference, "pair has an empty difference");
  const SqModule m = pair_module(pair, field);
  const int d = static_cast<int>(m.cone().dimension());
  const int keep = d - *module_dimension(m);
  for (FaceId f : pair.delta().faces()) {
    const CohomologyProfile h = cohomology(ext_complex(m, f));
    for (int i = h.min_index(); i < h.end_index(); ++i)
      if (i != keep && h.dim(i) != 0) return false;
  }
  return true;
}

std::optional<int> irreducible_dimension(const SqModule& m) {
  std::optional<int> best;
  const NuTable table = nu_table(m);
  for (const auto& [key, mult] : table.entries())
    best = std::max(best.value_or(key.first), key.first);
  return best;
}

std::optional<int> serre_max(const OrderIdeal& delta, const Field& field) {
  const SqModule ring = face_ring(delta, field);
  return serre_from_violation(first_serre_violation(ring, nu_table(ring)));
}

FiniteLengthProfile finite_length_profile(const SqModule& m) {
  return profile_from_exts(m, ext_modules(m));
}

SeqCmVerdict seq_cm_routes(const OrderIdeal& delta, const Field& field) {
  SeqCmVerdict v;
  v.route_ext = seq_cm_module(face_ring(delta, field));

  const int r = delta.dimension();
  for (int i = std::min(0, r); i <= r; ++i)
    if (!is_cohen_macaulay(face_ring(delta.pure_skeleton(i), field))) v.route_duval = false;

  for (int i = std::min(0, r); i <= r && v.route_filtration; ++i) {
    const OrderIdeal upper = delta.pure_skeleton(i);
    std::optional<OrderIdeal> lower;
    if (i < r) lower = delta.pure_skeleton(i + 1).skeleton(i);
    std::vector<FaceId> diff;
    for (FaceId f : upper.faces())
      if (!(lower && lower->contains(f))) diff.push_back(f);
    if (diff.empty()) continue;  // zero filtration quotient
    if (!is_cm_pair(IdealPair(upper, lower), field)) v.route_filtration = false;
  }
  return v;
}

SeqCmVerdict seq_cm(const OrderIdeal& delta, const Field& field) {
  const SeqCmVerdict v = seq_cm_routes(delta, field);
  if (!v.agree())
    throw Error(ErrorCode::InternalInconsistency,
                std::string("sequential Cohen-Macaulay routes disagree: ext=") +
                    (v.route_ext ? "true" : "false") + " duval=" + (v.route_duval ? "true" : "false") +
                    " filtration=" + (v.route_filtration ? "true" : "false"));
  return v;
}

bool seq_cm_module(const SqModule& m) {
  return seq_cm_from_exts(ext_modules(m), static_cast<int>(m.cone().dimension()));
}

bool is_gorenstein_star(const OrderIdeal& delta, const Field& field) {
  if (delta.dimension() <= 0) return gorenstein_from(delta, true, {});
  const SqModule ring = face_ring(delta, field);
  return gorenstein_from(delta, is_cohen_macaulay(ring), ext_modules(ring));
}

LocalCohomologyDeg0 local_cohomology_deg0(const SqModule& m) {
  const SemigroupCone& cone = m.cone();
  const int d = static_cast<int>(cone.dimension());
  const CohomologyProfile dual = cohomology(ext_complex(m, cone.zero_face()));
  const CohomologyProfile sheaf = cohomology(sheaf_cochain(m));
  LocalCohomologyDeg0 out;
  for (int i = 0; i <= d; ++i) out.dims.push_back(dual.dim(d - i));
  for (int i = 0; i < d; ++i) out.sheaf.push_back(sheaf.dim(i));

  for (int i = 2; i <= d; ++i)
    if (out.dims[static_cast<std::size_t>(i)] != out.sheaf[static_cast<std::size_t>(i - 1)])
      throw Error(ErrorCode::InternalInconsistency,
                  "degree-0 local cohomology H^" + std::to_string(i) + " is " +
                      std::to_string(out.dims[static_cast<std::size_t>(i)]) +
                      " by duality but the sheaf route gives " +
                      std::to_string(out.sheaf[static_cast<std::size_t>(i - 1)]));
  const long long lhs = static_cast<long long>(out.sheaf[0]);
  const long long rhs = static_cast<long long>(m.value_dim(cone.zero_face())) -
                        static_cast<long long>(out.dims[0]) + static_cast<long long>(out.dims[1]);
  if (lhs != rhs)
    throw Error(ErrorCode::InternalInconsistency,
                "global sections " + std::to_string(lhs) + " do not balance M_0 - H^0 + H^1 = " +
                    std::to_string(rhs));
  return out;
}

std::vector<StrandVerdict> linear_strand_profile(const SqModule& m) {
  return strands_from(m, nu_table(m), ext_modules(m));
}

std::vector<AbstractNuEntry> abstract_nu_table(const SqModule& m) {
  std::vector<AbstractNuEntry> out;
  const NuTable table = nu_table(m);
  for (const auto& [key, mult] : table.entries())
    out.push_back({key.first, cone_dim(m.cone(), key.second), mult, true});
  return out;
}

AbstractNuReport analyze_nu_table(const std::vector<AbstractNuEntry>& table, int p,
                                  bool simplicial_cm) {
  if (!simplicial_cm)
    throw Error(ErrorCode::ValidationError,
                "the nu-table formulas need a simplicial Cohen-Macaulay ambient ring",
                "ambient-not-asserted");
  std::vector<AbstractNuEntry> live;
  for (const auto& e : table) {
    if (e.i < 0 || e.dim_rw < 0)
      throw Error(ErrorCode::ValidationError, "negative index in nu-table", "negative-index");
    if (e.multiplicity > 0) live.push_back(e);
  }
  if (live.empty()) throw Error(ErrorCode::EmptyTable, "nu-table has no nonzero entry");

  AbstractNuReport rep;
  rep.p = p;
  rep.depth = std::numeric_limits<int>::max();
  rep.cm = true;
  rep.gcm = true;
  rep.buchsbaum_sufficient = true;
  std::optional<int> first_violation;
  for (const auto& e : live) {
    if (e.i == 0) rep.dimension_from_table = std::max(rep.dimension_from_table, e.dim_rw);
    rep.depth = std::min(rep.depth, e.dim_rw + e.i);
    if (e.dim_rw < p - e.i || e.dim_rw > p) rep.cm = false;
    if (e.dim_rw < p - e.i) {
      if (!first_violation || e.i < *first_violation) first_violation = e.i;
      if (e.dim_rw > 0) rep.gcm = false;
      if (!(e.dim_rw == 0 && e.prime)) rep.buchsbaum_sufficient = false;
    }
  }
  rep.serre_max = serre_from_violation(first_violation);
  rep.caveats.push_back("serre_max assumes all minimal primes have the same dimension");
  rep.caveats.push_back("buchsbaum_sufficient is a sufficient condition only");
  if (rep.serre_max && *rep.serre_max < 2)
    rep.caveats.push_back("serre_max below 2 is not characterized by the vanishing pattern");
  if (rep.dimension_from_table != p)
    rep.caveats.push_back("p differs from the dimension read off nu_0 (" +
                          std::to_string(rep.dimension_from_table) + ")");
  return rep;
}

AnalysisReport analyze_module(const SqModule& m) { return analyze_with_exts(m, ext_modules(m)); }

AnalysisReport analyze_face_ring(const OrderIdeal& delta, const Field& field) {
  const SqModule ring = face_ring(delta, field);
  const std::vector<SqModule> exts = ext_modules(ring);
  AnalysisReport rep = analyze_with_exts(ring, exts);
  rep.serre_max = serre_from_violation(first_serre_violation(ring, rep.nu));
  rep.seqcm_routes = seq_cm(delta, field);
  if (rep.seqcm_routes->route_ext != rep.seqcm)
    throw Error(ErrorCode::InternalInconsistency, "sequential Cohen-Macaulay verdict not reproducible");
  rep.gorenstein_star = gorenstein_from(delta, rep.cm, exts);
  return rep;
}

}  // namespace cmlattice
