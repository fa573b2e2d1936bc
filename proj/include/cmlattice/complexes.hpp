#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cmlattice/cochain.hpp"
#include "cmlattice/cone.hpp"
#include "cmlattice/linalg.hpp"

namespace cmlattice {

/// A downward-closed set of faces containing {0}. Encodes the radical
/// monomial ideal generated by the monomials whose face is outside the set.
///
/// Holds a pointer to its cone; the cone must outlive it.
class OrderIdeal {
 public:
  /// Downward closure of the seeds together with {0}.
  static OrderIdeal from_seeds(const SemigroupCone& cone, std::span<const FaceId> seeds);
  /// Validates that `members` is downward closed and contains {0}.
  static OrderIdeal from_faces(const SemigroupCone& cone, const std::vector<FaceId>& members);
  /// Faces F whose monomial x^{c(F)} avoids the ideal generated by the given
  /// exponents. Errors: ExponentOutsideCone, NotRadicalDetected.
  static OrderIdeal from_ideal_generators(const SemigroupCone& cone,
                                          const std::vector<IntVector>& exponents);
  static OrderIdeal whole(const SemigroupCone& cone);

  const SemigroupCone& cone() const { return *cone_; }
  bool contains(FaceId f) const { return member_.at(f); }
  std::vector<FaceId> faces() const;
  std::size_t size() const;
  /// Dimension of the realisation: max cell dimension, -1 for {{0}}.
  int dimension() const;
  /// Largest cell dimension of a member face containing f.
  int delta_value(FaceId f) const;
  /// Faces of cell dimension <= i. Errors: IndexOutOfRange.
  OrderIdeal skeleton(int i) const;
  /// Faces of cell dimension <= i lying under a face of cell dimension >= i.
  OrderIdeal pure_skeleton(int i) const;

  bool operator==(const OrderIdeal& other) const {
    return cone_ == other.cone_ && member_ == other.member_;
  }

 private:
  OrderIdeal(const SemigroupCone& cone, std::vector<bool> member)
      : cone_(&cone), member_(std::move(member)) {}

  const SemigroupCone* cone_;
  std::vector<bool> member_;
};

/// A pair Sigma inside Delta describing the module I_Sigma / I_Delta. An
/// absent sigma stands for the empty order ideal (giving K[Delta]).
class IdealPair {
 public:
  /// Errors: ValidationError ("sigma-not-contained", "sigma-is-zero-face").
  IdealPair(OrderIdeal delta, std::optional<OrderIdeal> sigma);

  const OrderIdeal& delta() const { return delta_; }
  const std::optional<OrderIdeal>& sigma() const { return sigma_; }
  bool in_difference(FaceId f) const;
  std::vector<FaceId> difference() const;

 private:
  OrderIdeal delta_;
  std::optional<OrderIdeal> sigma_;
};

/// A squarefree module recorded by the vector spaces M_{c(F)} and the
/// structure maps along covers of the face lattice.
///
/// Construction checks shapes and that the two routes around every diamond
/// agree, so structure maps along longer chains are well defined.
class SqModule {
 public:
  /// `cover_maps[k]` is the map M_{c(lower)} -> M_{c(upper)} for
  /// cone.covers()[k]. Errors: MalformedModule.
  SqModule(const SemigroupCone& cone, const Field& field, std::vector<std::size_t> value_dims,
           std::vector<Matrix> cover_maps);
  static SqModule zero(const SemigroupCone& cone, const Field& field);

  const SemigroupCone& cone() const { return *cone_; }
  const Field& field() const { return field_; }
  std::size_t value_dim(FaceId f) const { return dims_.at(f); }
  const std::vector<std::size_t>& value_dims() const { return dims_; }
  const Matrix& cover_map(FaceId lower, FaceId upper) const;
  const std::vector<Matrix>& cover_maps() const { return maps_; }
  /// The composite structure map M_{c(lower)} -> M_{c(upper)} for any pair
  /// of nested faces (identity when equal).
  Matrix structure_map(FaceId lower, FaceId upper) const;
  bool is_zero() const;

 private:
  const SemigroupCone* cone_;
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// I_{Delta/Sigma}: K on every face of Delta \ Sigma, identities between them.
SqModule pair_module(const IdealPair& pair, const Field& field);
/// K[Delta].
SqModule face_ring(const OrderIdeal& delta, const Field& field);

/// The degree c(F) part of RHom(M, omega_R), indexed 0..d: the term at
/// index i is the sum of the duals of M_{c(G)} over faces G containing F
/// with cone dimension d - i.
CochainComplex ext_complex(const SqModule& m, FaceId f);

/// Position of each face's summand inside one term of a face-indexed
/// complex.
struct TermLayout {
  std::vector<FaceId> faces;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  std::optional<std::size_t> offset_of(FaceId f) const;
};
TermLayout ext_term_layout(const SqModule& m, FaceId f, int index);

/// Ext^j(M, omega_R) as squarefree modules, for j = 0..d.
std::vector<SqModule> ext_modules(const SqModule& m);

/// Cellular cochains of the sheaf M^+ on the cross-section: the term at
/// index i is the sum of M_{c(F)} over faces of cone dimension i + 1.
CochainComplex sheaf_cochain(const SqModule& m);
TermLayout sheaf_term_layout(const SqModule& m, int index);

/// Replaces M_0 by the global sections of M^+, with the restriction maps to
/// the rays as structure maps.
SqModule regularize(const SqModule& m);

}  // namespace cmlattice
