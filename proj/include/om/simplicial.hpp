#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "om/smith.hpp"

namespace om {

using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices

/// Abstract simplicial complex given by generating simplices; every subset of
/// a generator is a face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets,
                    std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  int dimension() const;

  /// All nonempty faces grouped by dimension, each group sorted.
  const std::vector<std::vector<Simplex>>& faces() const;
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;

  friend bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::string> labels_;
  mutable std::vector<std::vector<Simplex>> faces_;
  mutable bool faces_ready_ = false;
};

/// boundary[k] maps C_k to C_{k-1}; boundary[0] is the zero map C_0 -> 0.
struct IntegerChainComplex {
  std::vector<std::size_t> dims;
  std::vector<SparseIntMatrix> boundary;

  /// Throws ConsistencyFailure if some boundary[k-1] * boundary[k] is nonzero.
  void check_boundary_squared() const;
};

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

IntegerChainComplex chain_complex(const SimplicialComplex& complex);

/// Unreduced integral homology, one entry per degree 0..dim.
std::vector<HomologyGroup> homology(const IntegerChainComplex& complex);
std::vector<HomologyGroup> homology(const SimplicialComplex& complex);

std::vector<std::size_t> betti_numbers(const std::vector<HomologyGroup>& groups);

}  // namespace om
