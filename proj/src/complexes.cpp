#include "cmlattice/complexes.hpp"

#include <algorithm>
#include <string>

#include "cmlattice/error.hpp"

namespace cmlattice {

namespace {

std::string face_label(const SemigroupCone& cone, FaceId f) {
  std::string out = "{";
  const auto& gens = cone.face(f).generator_set;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(gens[k]);
  }
  return out + "}";
}

std::vector<bool> downward_closure(const SemigroupCone& cone, std::vector<bool> member) {
  // Faces are numbered by nondecreasing cone dimension, so one downward sweep
  // suffices.
  for (FaceId f = cone.face_count(); f-- > 0;)
    if (member[f])
      for (FaceId lower : cone.lower_covers(f)) member[lower] = true;
  member[cone.zero_face()] = true;
  return member;
}

bool ideal_contains(const SemigroupCone& cone, const std::vector<IntVector>& exponents,
                    const IntVector& a) {
  for (const auto& b : exponents) {
    IntVector diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
    if (cone.contains(diff)) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- OrderIdeal

OrderIdeal OrderIdeal::from_seeds(const SemigroupCone& cone, std::span<const FaceId> seeds) {
  std::vector<bool> member(cone.face_count(), false);
  for (FaceId s : seeds) {
    if (s >= cone.face_count())
      throw Error(ErrorCode::IndexOutOfRange, "face id " + std::to_string(s) + " out of range");
    member[s] = true;
  }
  return OrderIdeal(cone, downward_closure(cone, std::move(member)));
}

OrderIdeal OrderIdeal::from_faces(const SemigroupCone& cone, const std::vector<FaceId>& members) {
  std::vector<bool> member(cone.face_count(), false);
  for (FaceId f : members) {
    if (f >= cone.face_count())
      throw Error(ErrorCode::IndexOutOfRange, "face id " + std::to_string(f) + " out of range");
    member[f] = true;
  }
  if (downward_closure(cone, member) != member)
    throw Error(ErrorCode::ValidationError, "face set is not an order ideal", "not-downward-closed");
  return OrderIdeal(cone, std::move(member));
}

OrderIdeal OrderIdeal::from_ideal_generators(const SemigroupCone& cone,
                                             const std::vector<IntVector>& exponents) {
  for (const auto& b : exponents) {
    if (b.size() != cone.dimension() || !cone.contains(b))
      throw Error(ErrorCode::ExponentOutsideCone, "ideal exponent outside the cone");
  }
  std::vector<bool> member(cone.face_count(), false);
  for (const Face& face : cone.faces()) {
    const IntVector& c = face.interior_point;
    IntVector doubled(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) doubled[k] = 2 * c[k];
    const bool once = ideal_contains(cone, exponents, c);
    if (once != ideal_contains(cone, exponents, doubled))
      throw Error(ErrorCode::NotRadicalDetected,
                  "ideal membership of c(F) and 2c(F) differ at face " + face_label(cone, face.id));
    member[face.id] = !once;
  }
  if (!member[cone.zero_face()])
    throw Error(ErrorCode::ValidationError, "ideal is the unit ideal", "unit-ideal");
  // Membership in a monomial ideal is upward closed along the face order, so
  // the complement is always downward closed; checked anyway.
  if (downward_closure(cone, member) != member)
    throw Error(ErrorCode::InternalInconsistency, "ideal complement is not downward closed");
  return OrderIdeal(cone, std::move(member));
}

OrderIdeal OrderIdeal::whole(const SemigroupCone& cone) {
  return OrderIdeal(cone, std::vector<bool>(cone.face_count(), true));
}

std::vector<FaceId> OrderIdeal::faces() const {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < member_.size(); ++f)
    if (member_[f]) out.push_back(f);
  return out;
}

std::size_t OrderIdeal::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

int OrderIdeal::dimension() const {
  int best = -1;
  for (FaceId f = 0; f < member_.size(); ++f)
    if (member_[f]) best = std::max(best, cone_->face(f).cell_dim());
  return best;
}

int OrderIdeal::delta_value(FaceId f) const {
  if (f >= member_.size() || !member_[f])
    throw Error(ErrorCode::IndexOutOfRange, "face is not in the order ideal");
  int best = cone_->face(f).cell_dim();
  for (FaceId g = 0; g < member_.size(); ++g)
    if (member_[g] && cone_->is_subface(f, g)) best = std::max(best, cone_->face(g).cell_dim());
  return best;
}

OrderIdeal OrderIdeal::skeleton(int i) const {
  if (i < -1 || i > dimension())
    throw Error(ErrorCode::IndexOutOfRange, "skeleton index " + std::to_string(i) + " outside [-1, " +
                                                std::to_string(dimension()) + "]");
  std::vector<bool> member(member_.size(), false);
  for (FaceId f = 0; f < member_.size(); ++f)
    member[f] = member_[f] && cone_->face(f).cell_dim() <= i;
  return OrderIdeal(*cone_, std::move(member));
}

OrderIdeal OrderIdeal::pure_skeleton(int i) const {
  if (i < -1 || i > dimension())
    throw Error(ErrorCode::IndexOutOfRange, "pure skeleton index " + std::to_string(i) +
                                                " outside [-1, " + std::to_string(dimension()) + "]");
  std::vector<bool> member(member_.size(), false);
  for (FaceId f = 0; f < member_.size(); ++f)
    member[f] = member_[f] && cone_->face(f).cell_dim() <= i && delta_value(f) >= i;
  return OrderIdeal(*cone_, std::move(member));
}

// ---------------------------------------------------------------- IdealPair

IdealPair::IdealPair(OrderIdeal delta, std::optional<OrderIdeal> sigma)
    : delta_(std::move(delta)), sigma_(std::move(sigma)) {
  if (!sigma_) return;
  if (&sigma_->cone() != &delta_.cone())
    throw Error(ErrorCode::ValidationError, "pair over two different cones", "cone-mismatch");
  for (FaceId f : sigma_->faces())
    if (!delta_.contains(f))
      throw Error(ErrorCode::ValidationError, "sigma is not contained in delta",
                  "sigma-not-contained");
  if (sigma_->size() == 1)
    throw Error(ErrorCode::ValidationError, "sigma must not be the order ideal {{0}}",
                "sigma-is-zero-face");
}

bool IdealPair::in_difference(FaceId f) const {
  return delta_.contains(f) && !(sigma_ && sigma_->contains(f));
}

std::vector<FaceId> IdealPair::difference() const {
  std::vector<FaceId> out;
  for (FaceId f : delta_.faces())
    if (in_difference(f)) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------- SqModule

SqModule::SqModule(const SemigroupCone& cone, const Field& field,
                   std::vector<std::size_t> value_dims, std::vector<Matrix> cover_maps)
    : cone_(&cone), field_(field), dims_(std::move(value_dims)), maps_(std::move(cover_maps)) {
  if (dims_.size() != cone.face_count())
    throw Error(ErrorCode::MalformedModule, "module needs one value dimension per face");
  if (maps_.size() != cone.covers().size())
    throw Error(ErrorCode::MalformedModule, "module needs one structure map per cover");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const Cover& cv = cone.covers()[k];
    const Matrix& m = maps_[k];
    if (!(m.field() == field_))
      throw Error(ErrorCode::MalformedModule, "structure map over the wrong field");
    if (m.rows() != dims_[cv.upper] || m.cols() != dims_[cv.lower])
      throw Error(ErrorCode::MalformedModule, "structure map " + face_label(cone, cv.lower) +
                                                  " -> " + face_label(cone, cv.upper) +
                                                  " has the wrong shape");
  }
  for (const Diamond& dm : length_two_intervals(cone)) {
    if (dims_[dm.bottom] == 0 || dims_[dm.top] == 0) continue;
    const Matrix first = cover_map(dm.middle[0], dm.top) * cover_map(dm.bottom, dm.middle[0]);
    for (std::size_t k = 1; k < dm.middle.size(); ++k) {
      if (!(cover_map(dm.middle[k], dm.top) * cover_map(dm.bottom, dm.middle[k]) == first))
        throw Error(ErrorCode::MalformedModule,
                    "structure maps do not commute on the interval " +
                        face_label(cone, dm.bottom) + " < " + face_label(cone, dm.top),
                    "diamond-not-commutative");
    }
  }
}

SqModule SqModule::zero(const SemigroupCone& cone, const Field& field) {
  std::vector<Matrix> maps(cone.covers().size(), Matrix(field, 0, 0));
  return SqModule(cone, field, std::vector<std::size_t>(cone.face_count(), 0), std::move(maps));
}

const Matrix& SqModule::cover_map(FaceId lower, FaceId upper) const {
  const auto k = cone_->cover_index(lower, upper);
  if (!k) throw Error(ErrorCode::NotACover, "faces do not form a cover");
  return maps_[*k];
}

Matrix SqModule::structure_map(FaceId lower, FaceId upper) const {
  if (!cone_->is_subface(lower, upper))
    throw Error(ErrorCode::IndexOutOfRange, "structure map between non-nested faces");
  Matrix acc = Matrix::identity(field_, dims_[lower]);
  FaceId current = lower;
  while (current != upper) {
    FaceId next = current;
    for (FaceId cand : cone_->upper_covers(current))
      if (cone_->is_subface(cand, upper)) {
        next = cand;
        break;
      }
    acc = cover_map(current, next) * acc;
    current = next;
  }
  return acc;
}

bool SqModule::is_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t v) { return v == 0; });
}

SqModule pair_module(const IdealPair& pair, const Field& field) {
  const SemigroupCone& cone = pair.delta().cone();
  std::vector<std::size_t> dims(cone.face_count(), 0);
  for (FaceId f : pair.difference()) dims[f] = 1;
  std::vector<Matrix> maps;
  maps.reserve(cone.covers().size());
  for (const Cover& cv : cone.covers())
    maps.push_back(dims[cv.lower] && dims[cv.upper] ? Matrix::identity(field, 1)
                                                    : Matrix(field, dims[cv.upper], dims[cv.lower]));
  return SqModule(cone, field, std::move(dims), std::move(maps));
}

SqModule face_ring(const OrderIdeal& delta, const Field& field) {
  return pair_module(IdealPair(delta, std::nullopt), field);
}

// ---------------------------------------------------------------- complexes

std::optional<std::size_t> TermLayout::offset_of(FaceId f) const {
  const auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || *it != f) return std::nullopt;
  return offsets[static_cast<std::size_t>(it - faces.begin())];
}

TermLayout ext_term_layout(const SqModule& m, FaceId f, int index) {
  const SemigroupCone& cone = m.cone();
  const int want = static_cast<int>(cone.dimension()) - index;
  TermLayout layout;
  for (const Face& g : cone.faces()) {
    if (g.cone_dim != want || !cone.is_subface(f, g.id)) continue;
    layout.faces.push_back(g.id);
    layout.offsets.push_back(layout.total);
    layout.total += m.value_dim(g.id);
  }
  return layout;
}

CochainComplex ext_complex(const SqModule& m, FaceId f) {
  const SemigroupCone& cone = m.cone();
  const int d = static_cast<int>(cone.dimension());
  std::vector<TermLayout> layouts;
  std::vector<std::size_t> dims;
  for (int i = 0; i <= d; ++i) {
    layouts.push_back(ext_term_layout(m, f, i));
    dims.push_back(layouts.back().total);
  }
  // d^i sends the dual of M_{c(G)} to the dual of M_{c(H)} for H covered by
  // G by the signed transpose of the structure map.
  std::vector<Matrix> diffs;
  for (int i = 0; i < d; ++i) {
    const TermLayout& src = layouts[static_cast<std::size_t>(i)];
    const TermLayout& dst = layouts[static_cast<std::size_t>(i + 1)];
    Matrix dm(m.field(), dst.total, src.total);
    for (std::size_t a = 0; a < src.faces.size(); ++a) {
      const FaceId g = src.faces[a];
      if (m.value_dim(g) == 0) continue;
      for (FaceId h : cone.lower_covers(g)) {
        const auto row0 = dst.offset_of(h);
        if (!row0 || m.value_dim(h) == 0) continue;
        const Matrix block = m.cover_map(h, g).transpose();
        const int sign = cone.incidence_sign(h, g);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c)
            dm.set(*row0 + r, src.offsets[a] + c, sign > 0 ? block(r, c) : -block(r, c));
      }
    }
    diffs.push_back(std::move(dm));
  }
  return CochainComplex(m.field(), 0, std::move(dims), std::move(diffs));
}

TermLayout sheaf_term_layout(const SqModule& m, int index) {
  TermLayout layout;
  for (const Face& g : m.cone().faces()) {
    if (g.cone_dim != index + 1) continue;
    layout.faces.push_back(g.id);
    layout.offsets.push_back(layout.total);
    layout.total += m.value_dim(g.id);
  }
  return layout;
}

CochainComplex sheaf_cochain(const SqModule& m) {
  const SemigroupCone& cone = m.cone();
  const int d = static_cast<int>(cone.dimension());
  std::vector<TermLayout> layouts;
  std::vector<std::size_t> dims;
  for (int i = 0; i < d; ++i) {
    layouts.push_back(sheaf_term_layout(m, i));
    dims.push_back(layouts.back().total);
  }
  std::vector<Matrix> diffs;
  for (int i = 0; i + 1 < d; ++i) {
    const TermLayout& src = layouts[static_cast<std::size_t>(i)];
    const TermLayout& dst = layouts[static_cast<std::size_t>(i + 1)];
    Matrix dm(m.field(), dst.total, src.total);
    for (std::size_t a = 0; a < src.faces.size(); ++a) {
      const FaceId g = src.faces[a];
      if (m.value_dim(g) == 0) continue;
      for (FaceId h : cone.upper_covers(g)) {
        const auto row0 = dst.offset_of(h);
        if (!row0 || m.value_dim(h) == 0) continue;
        const Matrix& block = m.cover_map(g, h);
        const int sign = cone.incidence_sign(g, h);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c)
            dm.set(*row0 + r, src.offsets[a] + c, sign > 0 ? block(r, c) : -block(r, c));
      }
    }
    diffs.push_back(std::move(dm));
  }
  return CochainComplex(m.field(), 0, std::move(dims), std::move(diffs));
}

std::vector<SqModule> ext_modules(const SqModule& m) {
  const SemigroupCone& cone = m.cone();
  const Field& field = m.field();
  const int d = static_cast<int>(cone.dimension());
  std::vector<CochainComplex> complexes;
  std::vector<CohomologyProfile> profiles;
  std::vector<std::vector<TermLayout>> layouts(cone.face_count());
  for (FaceId f = 0; f < cone.face_count(); ++f) {
    complexes.push_back(ext_complex(m, f));
    profiles.push_back(cohomology(complexes.back()));
    for (int i = 0; i <= d; ++i) layouts[f].push_back(ext_term_layout(m, f, i));
  }

  std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(d) + 1,
                                             std::vector<std::size_t>(cone.face_count()));
  for (int j = 0; j <= d; ++j)
    for (FaceId f = 0; f < cone.face_count(); ++f) dims[static_cast<std::size_t>(j)][f] = profiles[f].dim(j);

  std::vector<std::vector<Matrix>> maps(static_cast<std::size_t>(d) + 1);
  for (const Cover& cv : cone.covers()) {
    // E_{upper} is the quotient of E_{lower} by the summands of faces not
    // containing `upper`; the projection is a chain map.
    std::vector<Matrix> components;
    for (int i = 0; i <= d; ++i) {
      const TermLayout& src = layouts[cv.lower][static_cast<std::size_t>(i)];
      const TermLayout& dst = layouts[cv.upper][static_cast<std::size_t>(i)];
      Matrix proj(field, dst.total, src.total);
      for (std::size_t a = 0; a < dst.faces.size(); ++a) {
        const std::size_t from = *src.offset_of(dst.faces[a]);
        for (std::size_t k = 0; k < m.value_dim(dst.faces[a]); ++k)
          proj.set(dst.offsets[a] + k, from + k, std::int64_t{1});
      }
      components.push_back(std::move(proj));
    }
    const ChainMap projection(complexes[cv.lower], complexes[cv.upper], std::move(components));
    for (int j = 0; j <= d; ++j)
      maps[static_cast<std::size_t>(j)].push_back(
          induced_map_on_cohomology(projection, j, profiles[cv.lower], profiles[cv.upper]));
  }

  std::vector<SqModule> out;
  for (int j = 0; j <= d; ++j)
    out.emplace_back(cone, field, std::move(dims[static_cast<std::size_t>(j)]),
                     std::move(maps[static_cast<std::size_t>(j)]));
  return out;
}

SqModule regularize(const SqModule& m) {
  const SemigroupCone& cone = m.cone();
  const CochainComplex sheaf = sheaf_cochain(m);
  const Matrix sections = kernel_basis(sheaf.differential(0));
  const TermLayout rays = sheaf_term_layout(m, 0);

  std::vector<std::size_t> dims = m.value_dims();
  dims[cone.zero_face()] = sections.cols();
  std::vector<Matrix> maps = m.cover_maps();
  for (std::size_t k = 0; k < cone.covers().size(); ++k) {
    const Cover& cv = cone.covers()[k];
    if (cv.lower != cone.zero_face()) continue;
    const auto off = rays.offset_of(cv.upper);
    maps[k] = sections.row_range(*off, m.value_dim(cv.upper));
  }
  return SqModule(cone, m.field(), std::move(dims), std::move(maps));
}

}  // namespace cmlattice
