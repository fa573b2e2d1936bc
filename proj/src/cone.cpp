#include "cmlattice/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "cmlattice/error.hpp"

namespace cmlattice {

namespace {

std::string format_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Advances `combo` (strictly increasing indices < n) to the next k-subset
/// in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Matrix rows_of(const std::vector<IntVector>& vectors, const std::vector<std::size_t>& which,
               std::size_t dim) {
  const Field q = Field::rationals();
  Matrix m(q, which.size(), dim);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m.set(r, c, vectors[which[r]][c]);
  return m;
}

/// Primitive integer vector on the ray of a rational vector.
IntVector primitive(const Matrix& column) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (std::size_t i = 0; i < column.rows(); ++i) {
    mpz_class den = column(i, 0).get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (std::size_t i = 0; i < column.rows(); ++i) {
    mpq_class v = column(i, 0) * den_lcm;
    ints.push_back(v.get_num());
    mpz_class n = v.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  IntVector out;
  for (auto& v : ints) out.push_back(mpz_class(v / num_gcd).get_si());
  return out;
}

std::vector<std::size_t> greedy_basis(const std::vector<IntVector>& gens, const IndexSet& on_face,
                                      std::size_t dim) {
  std::vector<std::size_t> basis;
  std::size_t current = 0;
  for (std::size_t g : on_face) {
    std::vector<std::size_t> trial = basis;
    trial.push_back(g);
    const std::size_t r = rank(rows_of(gens, trial, dim));
    if (r > current) {
      basis = std::move(trial);
      current = r;
    }
  }
  return basis;
}

}  // namespace

SemigroupCone SemigroupCone::build(std::vector<IntVector> generators) {
  if (generators.empty())
    throw Error(ErrorCode::DegenerateInput, "no generators given", "no-generators");
  const std::size_t d = generators.front().size();
  if (d == 0) throw Error(ErrorCode::DegenerateInput, "generators live in Z^0", "zero-dimension");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != d)
      throw Error(ErrorCode::DegenerateInput,
                  "generator " + std::to_string(g) + " has " + std::to_string(generators[g].size()) +
                      " coordinates, expected " + std::to_string(d),
                  "dimension-mismatch");
    if (std::all_of(generators[g].begin(), generators[g].end(), [](auto x) { return x == 0; }))
      throw Error(ErrorCode::DegenerateInput, "generator " + std::to_string(g) + " is zero",
                  "zero-generator");
  }
  const std::size_t m = generators.size();

  // Z-span check: rank d and gcd of the maximal minors equal to 1.
  {
    mpz_class g = 0;
    if (m >= d) {
      std::vector<std::size_t> combo(d);
      std::iota(combo.begin(), combo.end(), 0);
      do {
        mpq_class det = determinant(rows_of(generators, combo, d));
        mpz_class num = det.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        if (g == 1) break;
      } while (next_combination(combo, m));
    }
    if (g != 1)
      throw Error(ErrorCode::LatticeNotFull,
                  "the generators do not span Z^" + std::to_string(d) + " as a group",
                  "lattice-not-full");
  }

  // Facet normals: every (d-1)-subset of rank d-1 gives a candidate
  // hyperplane; keep those with all generators on one side.
  std::vector<IntVector> normals;
  {
    std::vector<std::size_t> combo(d - 1);
    std::iota(combo.begin(), combo.end(), 0);
    do {
      const Matrix sub = rows_of(generators, combo, d);
      if (rank(sub) != d - 1) continue;
      IntVector h = primitive(kernel_basis(sub));
      bool pos = false, neg = false;
      for (const auto& g : generators) {
        const std::int64_t v = dot(h, g);
        pos = pos || v > 0;
        neg = neg || v < 0;
      }
      if (pos && neg) continue;
      if (neg)
        for (auto& x : h) x = -x;
      if (std::find(normals.begin(), normals.end(), h) == normals.end()) normals.push_back(h);
    } while (d > 1 && next_combination(combo, m));
  }
  {
    std::vector<std::size_t> all(normals.size());
    std::iota(all.begin(), all.end(), 0);
    if (normals.empty() || rank(rows_of(normals, all, d)) != d)
      throw Error(ErrorCode::NotPointed, "the cone contains a line", "not-pointed");
  }

  SemigroupCone cone;
  cone.dim_ = d;
  cone.generators_ = std::move(generators);
  cone.normals_ = std::move(normals);
  const auto& gens = cone.generators_;
  const auto& hs = cone.normals_;

  // Faces: close the facet generator sets under intersection.
  std::set<IndexSet> sets;
  {
    IndexSet all(m);
    std::iota(all.begin(), all.end(), 0);
    sets.insert(all);
    for (const auto& h : hs) {
      IndexSet on;
      for (std::size_t g = 0; g < m; ++g)
        if (dot(h, gens[g]) == 0) on.push_back(g);
      sets.insert(on);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<IndexSet> current(sets.begin(), sets.end());
      for (std::size_t a = 0; a < current.size(); ++a)
        for (std::size_t b = a + 1; b < current.size(); ++b) {
          IndexSet meet;
          std::set_intersection(current[a].begin(), current[a].end(), current[b].begin(),
                                current[b].end(), std::back_inserter(meet));
          if (sets.insert(meet).second) grew = true;
        }
    }
  }

  for (const auto& on : sets) {
    Face f;
    f.generator_set = on;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      bool zero = true;
      for (std::size_t g : on) zero = zero && dot(hs[i], gens[g]) == 0;
      if (zero) f.facet_zero_set.push_back(i);
    }
    f.cone_dim = on.empty() ? 0 : static_cast<int>(rank(rows_of(gens, on, d)));
    f.interior_point.assign(d, 0);
    for (std::size_t g : on)
      for (std::size_t c = 0; c < d; ++c) f.interior_point[c] += gens[g][c];
    cone.faces_.push_back(std::move(f));
  }
  std::sort(cone.faces_.begin(), cone.faces_.end(), [](const Face& a, const Face& b) {
    return std::tie(a.cone_dim, a.generator_set) < std::tie(b.cone_dim, b.generator_set);
  });
  for (FaceId id = 0; id < cone.faces_.size(); ++id) {
    cone.faces_[id].id = id;
    cone.by_zero_set_[cone.faces_[id].facet_zero_set] = id;
  }

  // Covers and incidence signs. Each face carries an ordered basis of its
  // span; the sign of G in the boundary of F is the orientation of
  // (basis of G, first generator of F off G) relative to the basis of F.
  std::vector<std::vector<std::size_t>> bases;
  for (const auto& f : cone.faces_) bases.push_back(greedy_basis(gens, f.generator_set, d));
  for (const auto& upper : cone.faces_) {
    for (const auto& lower : cone.faces_) {
      if (lower.cone_dim + 1 != upper.cone_dim) continue;
      if (!std::includes(upper.generator_set.begin(), upper.generator_set.end(),
                         lower.generator_set.begin(), lower.generator_set.end()))
        continue;
      std::size_t off = upper.generator_set.front();
      for (std::size_t g : upper.generator_set)
        if (!std::binary_search(lower.generator_set.begin(), lower.generator_set.end(), g)) {
          off = g;
          break;
        }
      std::vector<std::size_t> frame = bases[lower.id];
      frame.push_back(off);
      const Matrix upper_basis = rows_of(gens, bases[upper.id], d).transpose();
      const Matrix frame_vectors = rows_of(gens, frame, d).transpose();
      const SolveResult coords = solve(upper_basis, frame_vectors);
      const mpq_class det = determinant(coords.solution);
      cone.covers_.push_back({lower.id, upper.id, det > 0 ? 1 : -1});
    }
  }
  cone.index_covers();
  return cone;
}

void SemigroupCone::index_covers() {
  cover_lookup_.clear();
  up_.assign(faces_.size(), {});
  down_.assign(faces_.size(), {});
  for (std::size_t k = 0; k < covers_.size(); ++k) {
    cover_lookup_[{covers_[k].lower, covers_[k].upper}] = k;
    up_[covers_[k].lower].push_back(covers_[k].upper);
    down_[covers_[k].upper].push_back(covers_[k].lower);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
}

std::vector<FaceId> SemigroupCone::faces_of_dim(int cone_dim) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.cone_dim == cone_dim) out.push_back(f.id);
  return out;
}

std::int64_t SemigroupCone::evaluate(std::size_t facet, const IntVector& a) const {
  if (a.size() != dim_)
    throw Error(ErrorCode::ValidationError,
                "point " + format_vector(a) + " does not have " + std::to_string(dim_) +
                    " coordinates",
                "point-dimension");
  return dot(normals_.at(facet), a);
}

bool SemigroupCone::contains(const IntVector& a) const {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (evaluate(i, a) < 0) return false;
  return true;
}

FaceId SemigroupCone::face_of_point(const IntVector& a) const {
  IndexSet zero;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    const std::int64_t v = evaluate(i, a);
    if (v < 0)
      throw Error(ErrorCode::OutsideCone, "point " + format_vector(a) + " lies outside the cone",
                  "outside-cone");
    if (v == 0) zero.push_back(i);
  }
  const auto it = by_zero_set_.find(zero);
  if (it == by_zero_set_.end())
    throw Error(ErrorCode::InternalInconsistency,
                "zero set of " + format_vector(a) + " is not a face");
  return it->second;
}

FaceId SemigroupCone::face_spanned_by(const IndexSet& generator_indices) const {
  IndexSet zero;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    bool vanishes = true;
    for (std::size_t g : generator_indices) {
      if (g >= generators_.size())
        throw Error(ErrorCode::ValidationError,
                    "generator index " + std::to_string(g) + " out of range", "bad-generator-index");
      vanishes = vanishes && dot(normals_[i], generators_[g]) == 0;
    }
    if (vanishes) zero.push_back(i);
  }
  return by_zero_set_.at(zero);
}

IndexSet SemigroupCone::supp_plus(const IntVector& a) const {
  IndexSet out;
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (evaluate(i, a) > 0) out.push_back(i);
  return out;
}

bool SemigroupCone::psi_membership(const IntVector& a) const {
  IntVector neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  const IndexSet target = supp_plus(neg);
  for (const auto& g : generators_) {
    const IndexSet s = supp_plus(g);
    if (std::includes(target.begin(), target.end(), s.begin(), s.end())) return true;
  }
  return false;
}

bool SemigroupCone::is_simplicial() const { return faces_of_dim(1).size() == dim_; }

bool SemigroupCone::is_subface(FaceId lower, FaceId upper) const {
  const auto& lo = faces_.at(lower).generator_set;
  const auto& hi = faces_.at(upper).generator_set;
  return std::includes(hi.begin(), hi.end(), lo.begin(), lo.end());
}

std::optional<std::size_t> SemigroupCone::cover_index(FaceId lower, FaceId upper) const {
  const auto it = cover_lookup_.find({lower, upper});
  if (it == cover_lookup_.end()) return std::nullopt;
  return it->second;
}

int SemigroupCone::incidence_sign(FaceId lower, FaceId upper) const {
  const auto k = cover_index(lower, upper);
  if (!k)
    throw Error(ErrorCode::NotACover, "face " + std::to_string(lower) + " is not covered by face " +
                                          std::to_string(upper));
  return covers_[*k].sign;
}

SemigroupCone SemigroupCone::with_flipped_sign(FaceId lower, FaceId upper) const {
  const auto k = cover_index(lower, upper);
  if (!k) throw Error(ErrorCode::NotACover, "cannot flip the sign of a non-cover");
  SemigroupCone copy = *this;
  copy.covers_[*k].sign = -copy.covers_[*k].sign;
  return copy;
}

NormalityVerdict verify_normality_bounded(const SemigroupCone& cone, std::int64_t bound) {
  const std::size_t d = cone.dimension();
  std::map<IntVector, bool> memo;
  // Recursion depth is bounded: the sum of the facet normals is positive on
  // every nonzero point of the (pointed) cone and drops with each step.
  auto representable = [&](auto&& self, const IntVector& a) -> bool {
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return true;
    if (const auto it = memo.find(a); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : cone.generators()) {
      IntVector b(d);
      for (std::size_t i = 0; i < d; ++i) b[i] = a[i] - g[i];
      if (cone.contains(b) && self(self, b)) {
        ok = true;
        break;
      }
    }
    memo[a] = ok;
    return ok;
  };

  NormalityVerdict verdict;
  IntVector point(d, -bound);
  while (true) {
    if (cone.contains(point) && !representable(representable, point)) {
      verdict.consistent = false;
      verdict.counterexample = point;
      return verdict;
    }
    std::size_t i = 0;
    while (i < d && point[i] == bound) point[i++] = -bound;
    if (i == d) break;
    ++point[i];
  }
  return verdict;
}

std::vector<Diamond> length_two_intervals(const SemigroupCone& cone) {
  std::vector<Diamond> out;
  for (const auto& bottom : cone.faces()) {
    std::map<FaceId, std::vector<FaceId>> tops;
    for (FaceId mid : cone.upper_covers(bottom.id))
      for (FaceId top : cone.upper_covers(mid)) tops[top].push_back(mid);
    for (auto& [top, mids] : tops) out.push_back({bottom.id, top, mids});
  }
  return out;
}

}  // namespace cmlattice
