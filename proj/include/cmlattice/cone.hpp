#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cmlattice/linalg.hpp"

namespace cmlattice {

using IntVector = std::vector<std::int64_t>;
using FaceId = std::size_t;
/// Sorted, duplicate-free index list (facet indices or generator indices).
using IndexSet = std::vector<std::size_t>;

struct Face {
  FaceId id = 0;
  /// Facets (indices into facet_normals) containing the face.
  IndexSet facet_zero_set;
  /// Generators (indices into generators) lying on the face.
  IndexSet generator_set;
  int cone_dim = 0;
  /// Sum of the generators on the face; a lattice point in its relative
  /// interior (the zero vector for the face {0}).
  IntVector interior_point;

  /// Dimension of the face as a cell of the cross-section polytope.
  int cell_dim() const { return cone_dim - 1; }
};

struct Cover {
  FaceId lower = 0;
  FaceId upper = 0;
  /// Incidence sign of `lower` in the boundary of `upper`.
  int sign = 1;
};

/// The pointed rational cone spanned by a finite set of lattice vectors,
/// with its facet normals, full face lattice and a fixed incidence function.
///
/// Faces are numbered by (cone dimension, generator set) so that {0} is face
/// 0 and the whole cone is the last face. The object is immutable.
class SemigroupCone {
 public:
  /// Errors: DegenerateInput, LatticeNotFull, NotPointed.
  static SemigroupCone build(std::vector<IntVector> generators);

  std::size_t dimension() const { return dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  const std::vector<IntVector>& facet_normals() const { return normals_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Cover>& covers() const { return covers_; }
  std::size_t face_count() const { return faces_.size(); }
  const Face& face(FaceId id) const { return faces_.at(id); }
  FaceId zero_face() const { return 0; }
  FaceId full_face() const { return faces_.size() - 1; }
  std::vector<FaceId> faces_of_dim(int cone_dim) const;

  /// h_i(a) for the i-th facet normal.
  std::int64_t evaluate(std::size_t facet, const IntVector& a) const;
  /// Membership in the saturation Z^d intersected with the real cone.
  bool contains(const IntVector& a) const;
  /// The face whose relative interior contains a. Errors: OutsideCone.
  FaceId face_of_point(const IntVector& a) const;
  /// Smallest face containing the listed generators.
  FaceId face_spanned_by(const IndexSet& generator_indices) const;
  IndexSet supp_plus(const IntVector& a) const;
  bool psi_membership(const IntVector& a) const;
  bool is_simplicial() const;

  /// True when `lower` is a face of `upper` (not necessarily a cover).
  bool is_subface(FaceId lower, FaceId upper) const;
  std::optional<std::size_t> cover_index(FaceId lower, FaceId upper) const;
  /// Errors: NotACover.
  int incidence_sign(FaceId lower, FaceId upper) const;
  const std::vector<FaceId>& upper_covers(FaceId f) const { return up_.at(f); }
  const std::vector<FaceId>& lower_covers(FaceId f) const { return down_.at(f); }

  /// Copy with one incidence sign negated. Only for exercising the
  /// consistency checks against a broken incidence function.
  SemigroupCone with_flipped_sign(FaceId lower, FaceId upper) const;

 private:
  SemigroupCone() = default;
  void index_covers();

  std::size_t dim_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> normals_;
  std::vector<Face> faces_;
  std::vector<Cover> covers_;
  std::map<IndexSet, FaceId> by_zero_set_;
  std::map<std::pair<FaceId, FaceId>, std::size_t> cover_lookup_;
  std::vector<std::vector<FaceId>> up_;
  std::vector<std::vector<FaceId>> down_;
};

struct NormalityVerdict {
  bool consistent = true;
  /// First lattice point of the cone (in enumeration order) that is not a
  /// non-negative integer combination of the generators.
  std::optional<IntVector> counterexample;
};

/// Checks every lattice point of the cone inside the box [-bound, bound]^d
/// for membership in the semigroup generated by the generators.
NormalityVerdict verify_normality_bounded(const SemigroupCone& cone, std::int64_t bound);

/// A length-2 interval [bottom, top] of the face lattice and the faces
/// strictly between its ends. In a face lattice `middle` always has two
/// elements.
struct Diamond {
  FaceId bottom = 0;
  FaceId top = 0;
  std::vector<FaceId> middle;
};
std::vector<Diamond> length_two_intervals(const SemigroupCone& cone);

}  // namespace cmlattice
