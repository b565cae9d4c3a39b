#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "om/oriented_matroid.hpp"
#include "om/simplicial.hpp"

namespace om {

/// Matroid given by its lattice of flats.
class UnderlyingMatroid {
 public:
  /// Flats must be closed under intersection and contain the ground set.
  UnderlyingMatroid(int n, std::vector<ElementSet> flats);

  int ground_size() const { return n_; }
  int rank() const { return rank_of_flat(ElementSet::full(n_)); }
  /// Sorted by (size, bits).
  const std::vector<ElementSet>& flats() const { return flats_; }

  ElementSet closure(ElementSet s) const;
  int rank(ElementSet s) const { return rank_of_flat(closure(s)); }
  bool is_independent(ElementSet s) const { return rank(s) == s.size(); }
  /// Every maximal chain between two comparable flats has the same length.
  bool is_graded() const;

 private:
  int rank_of_flat(ElementSet flat) const;

  int n_;
  std::vector<ElementSet> flats_;
  std::vector<int> flat_rank_;  // longest chain from the bottom flat
};

/// {z(X) : X a covector}.
UnderlyingMatroid flats_from_covectors(const OrientedMatroid& m);

/// Inclusion-minimal dependent sets, sorted by (size, bits).
std::vector<ElementSet> circuits(const UnderlyingMatroid& u);

struct NbcTable {
  std::vector<int> order;  // zero-based elements, smallest first
  std::vector<ElementSet> circuits;
  std::vector<ElementSet> broken_circuits;
  std::vector<std::vector<ElementSet>> nbc;  // by cardinality

  std::vector<std::size_t> counts() const;
};

/// Empty order means natural order.
NbcTable nbc_sets(const UnderlyingMatroid& u, std::vector<int> order = {});

/// nbc counts; recomputed under the reversed order, raising
/// ConsistencyFailure on disagreement.
std::vector<std::size_t> os_betti(const UnderlyingMatroid& u);

struct GrComparison {
  std::vector<std::size_t> homology_ranks;
  std::vector<std::vector<BigInt>> torsion;
  std::vector<std::size_t> os_betti;
  long alternating_sum = 0;
};

/// Homology of the Salvetti order complex against the nbc counts; raises
/// ComparisonFailure at the first mismatching degree, on torsion, or on a
/// nonzero alternating sum.
GrComparison gr_comparison(const OrientedMatroid& m);

/// Homology of the order complex of the Salvetti poset.
std::vector<HomologyGroup> salvetti_homology(const OrientedMatroid& m);

}  // namespace om
