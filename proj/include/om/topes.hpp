#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "om/oriented_matroid.hpp"
#include "om/poset.hpp"
#include "om/salvetti.hpp"

namespace om {

/// |S(T, S)|; raises NotATope for non-topes.
int tope_distance(const OrientedMatroid& m, const SignVector& t, const SignVector& s);

enum class TopeOrder {
  /// S' <= S iff S(T,S') is contained in S(T,S).
  SeparationInclusion,
  /// S' <= S iff d(S',T) <= d(S,T); only a preorder, so building it fails
  /// with NotAntisymmetric as soon as two topes share a distance.
  Distance,
};

struct TopePoset {
  SignVector base;
  std::vector<SignVector> topes;  // canonical order, matching poset elements
  FinitePoset poset;
};

TopePoset tope_poset(const OrientedMatroid& m, const SignVector& base,
                     TopeOrder order = TopeOrder::SeparationInclusion);

struct SimplicialReport {
  bool simplicial = true;
  std::optional<SignVector> witness;  // first tope whose [0, T] is not Boolean
};

SimplicialReport is_simplicial(const OrientedMatroid& m);

struct LatticeEquivalenceReport {
  bool simplicial = false;
  bool all_lattices = true;
  std::optional<SignVector> non_simplicial_tope;
  std::optional<SignVector> non_lattice_base;
  LatticeReport non_lattice;  // witness pair indexes into the tope list
  /// Set when simplicial; metadata only.
  bool kpi1_predicted = false;
};

/// Simplicial iff every tope poset is a lattice; a disagreement raises
/// EquivalenceViolation.
LatticeEquivalenceReport lattice_equivalence_check(const OrientedMatroid& m);

struct PositivePath {
  SignVector from;
  SignVector to;
  std::vector<SalvettiCell> edges;  // [X, current tope] for each step
  std::vector<int> crossed;         // zero-based element crossed at each step
};

/// Every directed path of length d(T, S) from [T,T] to [S,S], in
/// lexicographic order of the crossed-element sequence.
std::vector<PositivePath> minimal_positive_paths(const OrientedMatroid& m, const SignVector& t, const SignVector& s);

/// Number of minimal positive paths, by dynamic programming over the
/// separation order (no enumeration).
std::uint64_t count_minimal_positive_paths(const OrientedMatroid& m, const SignVector& t, const SignVector& s);

/// Each path crosses every element of S(T,S) exactly once and nothing else.
bool crosses_separation_once(const PositivePath& path);

struct DistanceAgreement {
  bool agree = true;
  std::optional<std::pair<SignVector, SignVector>> witness;
  int separation = 0;
  int salvetti = 0;
  int dual = 0;
};

/// |S(T,S)| against BFS distance in the undirected Salvetti 1-skeleton and
/// in the dual 1-skeleton, over all tope pairs.
DistanceAgreement distance_agreement_check(const OrientedMatroid& m);

/// S -> -(S o ...) : the tope whose separation set from T is the complement
/// of S(T,S) must exist and the map must reverse the order.
bool tope_poset_duality_check(const TopePoset& tp);

/// Every minimal positive path T -> S extends to a minimal positive path
/// T -> -T.
bool antipodal_extension_check(const OrientedMatroid& m);

}  // namespace om
