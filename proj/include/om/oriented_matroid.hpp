#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "om/poset.hpp"
#include "om/rational.hpp"
#include "om/sign_vector.hpp"

namespace om {

enum class Axiom { V0, V1, V2, V3 };
std::string_view to_string(Axiom axiom);

/// Outcome of checking the covector axioms. On failure the first failing
/// axiom (in V0..V3 order) is recorded with its witness: X for V1, (X, Y)
/// for V2 and (X, Y, e) for V3.
struct AxiomReport {
  std::array<bool, 4> holds{true, true, true, true};
  std::optional<Axiom> failed;
  std::optional<SignVector> x;
  std::optional<SignVector> y;
  std::optional<int> element;  // zero-based

  bool pass() const { return !failed.has_value(); }
  std::string describe() const;
};

/// Checks V0 (zero vector), V1 (negation), V2 (composition) and V3
/// (elimination, exhaustive search for the eliminating Z).
AxiomReport verify_axioms(std::span<const SignVector> candidate);

/// Central arrangement in Q^l: one nonzero normal per hyperplane.
struct RationalArrangement {
  int dimension = 0;
  RationalMatrix normals;
};

/// Alternating sign map on ordered r-tuples, stored on sorted r-subsets.
class Chirotope {
 public:
  /// Values listed for the r-subsets of {1..n} in colex order.
  Chirotope(int rank, int n, const std::vector<Sign>& colex_values);

  /// Values given on ordered zero-based tuples; inconsistent permutations or
  /// a nonzero value on a repeated tuple raise NotAlternating.
  static Chirotope from_tuples(int rank, int n, const std::vector<std::pair<std::vector<int>, Sign>>& values);

  /// Signs of the maximal minors of the normal matrix.
  static Chirotope from_arrangement(const RationalArrangement& arrangement);

  /// r-subsets of an n-set in colex order.
  static std::vector<ElementSet> colex_subsets(int n, int r);

  int rank() const { return rank_; }
  int ground_size() const { return n_; }

  /// Value on an ordered tuple of zero-based elements.
  Sign operator()(std::span<const int> tuple) const;
  Sign on_basis(ElementSet basis) const;
  void set(ElementSet basis, Sign value);

  std::vector<Sign> colex_values() const;

 private:
  Chirotope(int rank, int n);
  void require_nondegenerate() const;

  int rank_;
  int n_;
  std::unordered_map<std::uint32_t, Sign> values_;
};

/// A verified set of covectors together with its face poset (L, <=).
class OrientedMatroid {
 public:
  OrientedMatroid() = default;

  /// Verifies the covector axioms (AxiomFailure) and gradedness (NotGraded).
  static OrientedMatroid from_covectors(std::vector<SignVector> covectors);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }

  /// Covectors in canonical order.
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const std::vector<SignVector>& topes() const { return topes_; }
  const std::vector<SignVector>& cocircuits() const { return cocircuits_; }

  bool contains(const SignVector& x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> index_of(const SignVector& x) const;
  bool is_tope(const SignVector& x) const;

  int height(const SignVector& x) const;
  int height_at(std::size_t i) const { return face_poset_.height(i); }
  /// Number of covectors at each height 0..rank.
  std::vector<std::size_t> height_profile() const;

  const FinitePoset& face_poset() const { return face_poset_; }

  friend bool operator==(const OrientedMatroid& a, const OrientedMatroid& b) {
    return a.n_ == b.n_ && a.covectors_ == b.covectors_;
  }

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<SignVector> covectors_;
  std::vector<SignVector> topes_;
  std::vector<SignVector> cocircuits_;
  std::unordered_map<SignVector, std::size_t, SignVectorHash> index_;
  FinitePoset face_poset_;
};

struct RankHeight {
  int rank = 0;
  std::vector<std::pair<SignVector, int>> heights;  // canonical order
};

/// Rank and height map of a covector set under the conformal order; raises
/// NotGraded if maximal chains from 0 to the topes differ in length.
RankHeight rank_and_height(std::span<const SignVector> covectors);
RankHeight rank_and_height(const OrientedMatroid& m);

inline const std::vector<SignVector>& topes(const OrientedMatroid& m) { return m.topes(); }

/// Exact covectors of a central rational arrangement: cocircuits from the
/// kernels of corank-one subsets of normals, then composition closure.
OrientedMatroid from_arrangement(const RationalArrangement& arrangement);

/// Both signs of each cocircuit read off the chirotope on hyperplane
/// spanning (r-1)-subsets; canonical order.
std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& chi);

/// Composition closure of the cocircuits plus the zero vector.
OrientedMatroid span_from_cocircuits(std::span<const SignVector> cocircuits);

struct SimplicityReport {
  bool simple = true;
  ElementSet loops;
  std::vector<std::pair<int, int>> parallel;      // zero-based, X_e = X_f
  std::vector<std::pair<int, int>> antiparallel;  // zero-based, X_e = -X_f
  ElementSet offending;
};

SimplicityReport is_simple(const OrientedMatroid& m);

/// New label of old element e is permutation[e]; signs are then reversed
/// on `reorientation` (new labels).
struct IsomorphismWitness {
  std::vector<int> permutation;
  ElementSet reorientation;
};

inline constexpr int kIsomorphismSearchLimit = 8;

/// Searches relabelings and reorientations mapping M1 onto M2. Raises
/// SearchBudgetExceeded when the ground set is larger than the limit.
std::optional<IsomorphismWitness> are_isomorphic(const OrientedMatroid& m1, const OrientedMatroid& m2);

}  // namespace om
