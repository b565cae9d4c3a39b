#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "om/oriented_matroid.hpp"
#include "om/poset.hpp"
#include "om/simplicial.hpp"

namespace om {

/// The cell [X, T] of the Salvetti complex: X a covector, T a tope above it.
/// Its dimension is rank - height(X), so [T, T] are the vertices and [0, T]
/// the top cells.
struct SalvettiCell {
  SignVector covector;
  SignVector tope;
  int dim = 0;

  std::string to_string() const { return "[" + covector.to_string() + "," + tope.to_string() + "]"; }
  friend bool operator==(const SalvettiCell& a, const SalvettiCell& b) {
    return a.covector == b.covector && a.tope == b.tope;
  }
};

/// Cells sorted by (dim, covector, tope); the poset stores smaller cell <=
/// larger cell, i.e. [Y, S] <= [X, T] iff X <= Y and Y o T = S, so heights
/// coincide with cell dimensions.
class SalvettiComplex {
 public:
  explicit SalvettiComplex(OrientedMatroid matroid);

  const OrientedMatroid& matroid() const { return matroid_; }
  const std::vector<SalvettiCell>& cells() const { return cells_; }
  const FinitePoset& poset() const { return poset_; }
  std::optional<std::size_t> index_of(const SignVector& covector, const SignVector& tope) const;

 private:
  OrientedMatroid matroid_;
  std::vector<SalvettiCell> cells_;
  FinitePoset poset_;
};

inline SalvettiComplex build_salvetti_poset(const OrientedMatroid& m) { return SalvettiComplex(m); }

/// {[Y, Y o T] : X < Y}; raises InvalidCell if c is not a cell of m.
std::vector<SalvettiCell> boundary_cells(const SalvettiCell& c, const OrientedMatroid& m);

struct FVectorEuler {
  std::vector<std::size_t> f;
  long euler = 0;
};

/// Raises ConsistencyFailure unless f_0 = f_rank = #topes and the Euler
/// characteristic vanishes.
FVectorEuler f_vector_and_euler(const SalvettiComplex& sal);

struct DirectedEdge {
  SalvettiCell cell;  // the 1-cell [X, T]
  SignVector source;  // T
  SignVector target;  // the other tope above X
};

struct OrientedSkeleton {
  std::vector<SignVector> vertices;
  std::vector<DirectedEdge> edges;  // sorted by (source, covector)
};

OrientedSkeleton oriented_one_skeleton(const OrientedMatroid& m);

struct NerveReport {
  bool identical = false;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  std::size_t faces = 0;
  /// Whether every pairwise-intersecting family was a chain of the Salvetti order.
  bool cliques_are_chains = true;
  std::string witness;
};

/// Nerve of the covering by pairs (F, T), F <= T, with simplices the
/// pairwise-intersecting families; compared face by face with the order
/// complex of the Salvetti poset.
NerveReport nerve_check(const OrientedMatroid& m);

/// X -> [X, X o T] reverses order into the Salvetti poset, [X, T'] -> X
/// reverses it back, and the composite is the identity on covectors.
bool retraction_check(const OrientedMatroid& m, const SignVector& tope);

/// Every chain of cells with top [X1, T1] consists of cells [Xi, Xi o T1],
/// and distinct chains have distinct (covector chain, T1) data.
bool chain_determination_check(const SalvettiComplex& sal);

/// Strictly-below sets agree with the closure of the boundary formula.
bool boundary_coherence_check(const SalvettiComplex& sal);

/// Every interval of length two holds exactly two middle elements.
bool diamond_check(const FinitePoset& poset);

/// `.poset` text: "dim covector tope" per cell, then "lower upper" per cover
/// with 1-based cell indices.
void write_poset(std::ostream& out, const SalvettiComplex& sal);

}  // namespace om
