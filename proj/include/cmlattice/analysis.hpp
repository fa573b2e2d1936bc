#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmlattice/complexes.hpp"

namespace cmlattice {

/// Multiplicities nu_i(P_F, M) of the minimal irreducible resolution of a
/// squarefree module. Only nonzero entries are stored.
class NuTable {
 public:
  void set(int i, FaceId f, std::size_t multiplicity);
  std::size_t get(int i, FaceId f) const;
  const std::map<std::pair<int, FaceId>, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool operator==(const NuTable&) const = default;

 private:
  std::map<std::pair<int, FaceId>, std::size_t> entries_;
};

NuTable nu_table(const SqModule& m);

/// Largest cone dimension of a face carrying a nonzero value; nullopt for
/// the zero module.
std::optional<int> module_dimension(const SqModule& m);
/// min{cone_dim F + i : nu_i(P_F, M) != 0}. Errors: ZeroModule.
int depth(const SqModule& m);
/// The zero module counts as Cohen-Macaulay.
bool is_cohen_macaulay(const SqModule& m);
/// Errors: EmptyDifference.
bool is_cm_pair(const IdealPair& pair, const Field& field);
/// max{i : nu_i != 0}; nullopt for the zero module.
std::optional<int> irreducible_dimension(const SqModule& m);

/// nullopt means every (S_n) holds. 1 means (S_2) fails.
std::optional<int> serre_max(const OrderIdeal& delta, const Field& field);

struct FiniteLengthProfile {
  /// finite_length[i]: H^i_m(M) has finite length, for i = 0..d.
  std::vector<bool> finite_length;
  bool gcm = true;
  bool buchsbaum = true;
};
FiniteLengthProfile finite_length_profile(const SqModule& m);

struct SeqCmVerdict {
  bool route_ext = true;
  bool route_duval = true;
  bool route_filtration = true;
  bool agree() const { return route_ext == route_duval && route_duval == route_filtration; }
};
/// All three routes evaluated, without the agreement check.
SeqCmVerdict seq_cm_routes(const OrderIdeal& delta, const Field& field);
/// Errors: InternalInconsistency when the routes disagree.
SeqCmVerdict seq_cm(const OrderIdeal& delta, const Field& field);
/// Every Ext^j(M, omega_R) is zero or Cohen-Macaulay of dimension d - j.
bool seq_cm_module(const SqModule& m);

bool is_gorenstein_star(const OrderIdeal& delta, const Field& field);

struct LocalCohomologyDeg0 {
  /// dims[i] = dim [H^i_m(M)]_0 for i = 0..d, via E_{0}(M).
  std::vector<std::size_t> dims;
  /// sheaf[i] = dim H^i(X; M^+) for i = 0..d-1.
  std::vector<std::size_t> sheaf;
};
/// Errors: InternalInconsistency when the two routes disagree.
LocalCohomologyDeg0 local_cohomology_deg0(const SqModule& m);

struct StrandVerdict {
  int strand = 0;
  bool acyclic = true;
  /// term_dims[i]: number of summands R/P_F, cone_dim F = strand - i, in
  /// cohomological degree i.
  std::vector<std::size_t> term_dims;
  bool nonzero() const;
};
/// One entry per strand 0..d.
std::vector<StrandVerdict> linear_strand_profile(const SqModule& m);

/// A nu-table known only through dim(R/W) of the irreducible ideals W.
struct AbstractNuEntry {
  int i = 0;
  int dim_rw = 0;
  std::size_t multiplicity = 0;
  /// W is the monomial prime ideal itself (not merely primary to it).
  bool prime = true;
};

struct AbstractNuReport {
  int p = 0;
  int dimension_from_table = 0;
  int depth = 0;
  bool cm = false;
  std::optional<int> serre_max;
  bool gcm = false;
  bool buchsbaum_sufficient = false;
  std::vector<std::string> caveats;
};

/// Errors: EmptyTable; ValidationError when the ambient ring is not asserted
/// simplicial and Cohen-Macaulay.
AbstractNuReport analyze_nu_table(const std::vector<AbstractNuEntry>& table, int p,
                                  bool simplicial_cm);
std::vector<AbstractNuEntry> abstract_nu_table(const SqModule& m);

struct AnalysisReport {
  std::optional<int> dimension;
  std::optional<int> depth;
  bool cm = true;
  std::optional<int> ir_dim;
  /// Present for face rings only. nullopt inside means infinity.
  std::optional<std::optional<int>> serre_max;
  FiniteLengthProfile finite_length;
  bool seqcm = true;
  /// Present for face rings only.
  std::optional<SeqCmVerdict> seqcm_routes;
  std::optional<bool> gorenstein_star;
  LocalCohomologyDeg0 local_coh0;
  NuTable nu;
  std::vector<StrandVerdict> strands;
};

AnalysisReport analyze_module(const SqModule& m);
AnalysisReport analyze_face_ring(const OrderIdeal& delta, const Field& field);

}  // namespace cmlattice
