#pragma once

#include <cstddef>
#include <vector>

#include "cmlattice/linalg.hpp"

namespace cmlattice {

/// A bounded cochain complex of finite-dimensional vector spaces
///   0 -> V^{lo} -> V^{lo+1} -> ... -> V^{hi} -> 0.
/// Construction checks every differential shape and d^{i+1} d^i = 0.
class CochainComplex {
 public:
  /// `differentials[k]` is d^{min_index + k}: V^{min_index + k} -> V^{min_index + k + 1};
  /// there is one fewer differential than terms.
  CochainComplex(const Field& field, int min_index, std::vector<std::size_t> term_dims,
                 std::vector<Matrix> differentials);

  static CochainComplex zero(const Field& field, int min_index, std::size_t length);

  const Field& field() const { return field_; }
  int min_index() const { return min_index_; }
  /// One past the last index.
  int end_index() const { return min_index_ + static_cast<int>(dims_.size()); }
  std::size_t dim(int i) const;
  /// d^i, including the zero maps into and out of the bounded range.
  Matrix differential(int i) const;
  long long euler_characteristic() const;

 private:
  Field field_;
  int min_index_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> differentials_;
};

/// Cohomology dimensions plus, per index, a matrix whose columns are
/// representative cocycles spanning a complement of the coboundaries.
class CohomologyProfile {
 public:
  int min_index() const { return min_index_; }
  int end_index() const { return min_index_ + static_cast<int>(dims_.size()); }
  std::size_t dim(int i) const;
  const Matrix& representatives(int i) const;
  /// Basis of the coboundaries im d^{i-1} (pivot columns of d^{i-1}).
  const Matrix& coboundaries(int i) const;
  long long euler_characteristic() const;
  std::vector<std::size_t> dims() const { return dims_; }

 private:
  friend CohomologyProfile cohomology(const CochainComplex&);
  int min_index_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> representatives_;
  std::vector<Matrix> coboundaries_;
};

CohomologyProfile cohomology(const CochainComplex& complex);

/// A degree-preserving map between two complexes on the same index range.
/// Construction checks that it commutes with the differentials.
class ChainMap {
 public:
  ChainMap(CochainComplex source, CochainComplex target, std::vector<Matrix> components);

  const CochainComplex& source() const { return source_; }
  const CochainComplex& target() const { return target_; }
  const Matrix& component(int i) const;

 private:
  CochainComplex source_;
  CochainComplex target_;
  std::vector<Matrix> components_;
};

/// Matrix of H^i(f) in the representative bases that `cohomology` picks for
/// the source and target.
Matrix induced_map_on_cohomology(const ChainMap& f, int i);

/// Same, reusing already computed profiles of f.source() and f.target().
Matrix induced_map_on_cohomology(const ChainMap& f, int i, const CohomologyProfile& source,
                                 const CohomologyProfile& target);

}  // namespace cmlattice
