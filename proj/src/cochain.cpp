#include "cmlattice/cochain.hpp"

#include <string>

#include "cmlattice/error.hpp"

namespace cmlattice {

CochainComplex::CochainComplex(const Field& field, int min_index, std::vector<std::size_t> term_dims,
                               std::vector<Matrix> differentials)
    : field_(field), min_index_(min_index), dims_(std::move(term_dims)),
      differentials_(std::move(differentials)) {
  const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
  if (differentials_.size() != expected)
    throw Error(ErrorCode::MalformedComplex, "complex has " + std::to_string(dims_.size()) +
                                                 " terms but " + std::to_string(differentials_.size()) +
                                                 " differentials");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    const Matrix& d = differentials_[k];
    if (!(d.field() == field_))
      throw Error(ErrorCode::MalformedComplex, "differential over the wrong field");
    if (d.cols() != dims_[k] || d.rows() != dims_[k + 1])
      throw Error(ErrorCode::MalformedComplex,
                  "differential d^" + std::to_string(min_index_ + static_cast<int>(k)) +
                      " has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                      ", expected " + std::to_string(dims_[k + 1]) + "x" + std::to_string(dims_[k]));
  }
  for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
    if (!(differentials_[k + 1] * differentials_[k]).is_zero())
      throw Error(ErrorCode::MalformedComplex,
                  "d^" + std::to_string(min_index_ + static_cast<int>(k) + 1) + " o d^" +
                      std::to_string(min_index_ + static_cast<int>(k)) + " != 0");
  }
}

CochainComplex CochainComplex::zero(const Field& field, int min_index, std::size_t length) {
  std::vector<Matrix> ds;
  for (std::size_t k = 0; k + 1 < length; ++k) ds.emplace_back(field, 0, 0);
  return CochainComplex(field, min_index, std::vector<std::size_t>(length, 0), std::move(ds));
}

std::size_t CochainComplex::dim(int i) const {
  if (i < min_index_ || i >= end_index()) return 0;
  return dims_[static_cast<std::size_t>(i - min_index_)];
}

Matrix CochainComplex::differential(int i) const {
  if (i >= min_index_ && i + 1 < end_index())
    return differentials_[static_cast<std::size_t>(i - min_index_)];
  return Matrix(field_, dim(i + 1), dim(i));
}

long long CochainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int i = min_index_; i < end_index(); ++i)
    chi += ((i % 2 == 0) ? 1 : -1) * static_cast<long long>(dim(i));
  return chi;
}

std::size_t CohomologyProfile::dim(int i) const {
  if (i < min_index_ || i >= end_index()) return 0;
  return dims_[static_cast<std::size_t>(i - min_index_)];
}

const Matrix& CohomologyProfile::representatives(int i) const {
  return representatives_.at(static_cast<std::size_t>(i - min_index_));
}

const Matrix& CohomologyProfile::coboundaries(int i) const {
  return coboundaries_.at(static_cast<std::size_t>(i - min_index_));
}

long long CohomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (int i = min_index_; i < end_index(); ++i)
    chi += ((i % 2 == 0) ? 1 : -1) * static_cast<long long>(dim(i));
  return chi;
}

CohomologyProfile cohomology(const CochainComplex& complex) {
  CohomologyProfile profile;
  profile.min_index_ = complex.min_index();
  for (int i = complex.min_index(); i < complex.end_index(); ++i) {
    const Matrix incoming = complex.differential(i - 1);
    const Matrix cocycles = kernel_basis(complex.differential(i));
    // Pivots are taken left to right, so the pivot columns among the
    // incoming block span the coboundaries and the remaining pivots (all in
    // the cocycle block) extend them to a basis of the cocycles.
    const RowReduction rr = row_reduce(incoming.hstack(cocycles));
    std::vector<std::size_t> boundary_cols, rep_cols;
    for (std::size_t c : rr.pivot_columns) {
      if (c < incoming.cols())
        boundary_cols.push_back(c);
      else
        rep_cols.push_back(c - incoming.cols());
    }
    profile.coboundaries_.push_back(incoming.select_columns(boundary_cols));
    profile.representatives_.push_back(cocycles.select_columns(rep_cols));
    profile.dims_.push_back(rep_cols.size());
  }
  return profile;
}

ChainMap::ChainMap(CochainComplex source, CochainComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.min_index() != target_.min_index() || source_.end_index() != target_.end_index())
    throw Error(ErrorCode::NotAChainMap, "chain map between complexes on different index ranges");
  const int lo = source_.min_index(), hi = source_.end_index();
  if (components_.size() != static_cast<std::size_t>(hi - lo))
    throw Error(ErrorCode::NotAChainMap, "chain map has the wrong number of components");
  for (int i = lo; i < hi; ++i) {
    const Matrix& f = component(i);
    if (f.rows() != target_.dim(i) || f.cols() != source_.dim(i))
      throw Error(ErrorCode::NotAChainMap, "chain map component " + std::to_string(i) +
                                               " has the wrong shape");
  }
  for (int i = lo; i + 1 < hi; ++i) {
    if (!(target_.differential(i) * component(i) == component(i + 1) * source_.differential(i)))
      throw Error(ErrorCode::NotAChainMap,
                  "map does not commute with the differentials at index " + std::to_string(i));
  }
}

const Matrix& ChainMap::component(int i) const {
  return components_.at(static_cast<std::size_t>(i - source_.min_index()));
}

Matrix induced_map_on_cohomology(const ChainMap& f, int i) {
  return induced_map_on_cohomology(f, i, cohomology(f.source()), cohomology(f.target()));
}

Matrix induced_map_on_cohomology(const ChainMap& f, int i, const CohomologyProfile& source,
                                 const CohomologyProfile& target) {
  const Field& field = f.source().field();
  if (i < f.source().min_index() || i >= f.source().end_index()) return Matrix(field, 0, 0);
  const Matrix images = f.component(i) * source.representatives(i);
  const Matrix& boundaries = target.coboundaries(i);
  const Matrix basis = boundaries.hstack(target.representatives(i));
  const SolveResult coords = solve(basis, images);
  if (!coords.solvable)
    throw Error(ErrorCode::InternalInconsistency,
                "image of a cocycle is not a cocycle at index " + std::to_string(i));
  return coords.solution.row_range(boundaries.cols(), target.dim(i));
}

}  // namespace cmlattice
