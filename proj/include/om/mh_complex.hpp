#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "om/oriented_matroid.hpp"
#include "om/poset.hpp"
#include "om/salvetti.hpp"

namespace om {

/// Face poset of a regular CW complex with cell dimensions. Vertices are the
/// dimension-0 cells, edges the dimension-1 cells; each edge must lie over
/// exactly two distinct vertices.
class CWPoset {
 public:
  struct Edge {
    std::size_t cell;
    std::size_t a;  // vertex positions
    std::size_t b;
  };

  CWPoset(FinitePoset poset, std::vector<int> dims);

  static CWPoset from_salvetti(const SalvettiComplex& sal);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return dims_.size(); }
  int dim(std::size_t cell) const { return dims_[cell]; }
  const std::string& label(std::size_t cell) const { return poset_.label(cell); }

  /// Cell ids of the vertices; a vertex is referred to by its position here.
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// V(e): sorted vertex positions in the closed cell.
  const std::vector<std::size_t>& cell_vertices(std::size_t cell) const { return cell_vertices_[cell]; }
  /// Edges (positions in edges()) of the closed cell.
  const std::vector<std::size_t>& cell_edges(std::size_t cell) const { return cell_edges_[cell]; }

 private:
  FinitePoset poset_;
  std::vector<int> dims_;
  std::vector<std::size_t> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> cell_vertices_;
  std::vector<std::vector<std::size_t>> cell_edges_;
};

/// Square table of graph distances, -1 for unreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, -1) {}
  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  int& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

struct SkeletonDistances {
  DistanceMatrix global;              // indexed by vertex position
  std::vector<DistanceMatrix> local;  // per cell, indexed like cell_vertices(cell)
};

/// BFS distances on G(Q) and on every G(e). Raises Disconnected naming one
/// vertex from each side.
SkeletonDistances skeleton_distances(const CWPoset& q);

struct MHWitness {
  std::size_t vertex = 0;  // cell id of v
  std::size_t cell = 0;    // cell id of e
  std::optional<std::size_t> context;
  std::optional<std::size_t> other_context;
  std::string clause;

  std::string describe(const CWPoset& q) const;
};

struct CheckVerdict {
  bool pass = true;
  std::optional<MHWitness> witness;
};

struct OmegaEntry {
  std::size_t vertex;  // cell ids throughout
  std::size_t cell;
  std::size_t nearest;
  std::size_t farthest;
};

struct MHReport {
  CheckVerdict qmh;
  CheckVerdict lmh;
  CheckVerdict mh;
  /// d(v, v') = d_G(e)(v, v') for all cells e and v, v' in V(e).
  bool local_distances_agree = false;
  /// Global nearest/farthest maps, filled when mh passes.
  std::vector<OmegaEntry> omega;
};

CheckVerdict qmh_check(const CWPoset& q);
CheckVerdict lmh_check(const CWPoset& q);
MHReport mh_check(const CWPoset& q);

/// (R^l, F*): covectors with the order reversed; topes become vertices and
/// the zero covector the top cell.
CWPoset dual_complex(const OrientedMatroid& m);

}  // namespace om
