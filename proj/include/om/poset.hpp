#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace om {

class SimplicialComplex;

/// A validated finite partial order on the elements 0..size()-1.
///
/// Up- and down-sets are kept as bitsets so order queries, cover computation
/// and interval extraction are all word-parallel. Labels are opaque strings
/// used only for reports.
class FinitePoset {
 public:
  using Relation = std::function<bool(std::size_t, std::size_t)>;
  using Bitset = boost::dynamic_bitset<>;

  FinitePoset() = default;

  /// Evaluates `leq` on every ordered pair and validates the order axioms.
  /// Throws NotReflexive, NotAntisymmetric or NotTransitive with a witness.
  static FinitePoset build(std::size_t size, const Relation& leq, std::vector<std::string> labels = {});

  /// Builds the reflexive-transitive closure of a covering relation given as
  /// (lower, upper) pairs; a cycle raises NotAntisymmetric.
  static FinitePoset from_covers(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                 std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && up_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return up_[a][b] || up_[b][a]; }

  /// {b : a <= b}, including a.
  const Bitset& up_set(std::size_t a) const { return up_[a]; }
  /// {b : b <= a}, including a.
  const Bitset& down_set(std::size_t a) const { return down_[a]; }

  /// Covering pairs (lower, upper), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_covers_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_covers_[a]; }

  /// Length of the longest chain from a minimal element up to a.
  int height(std::size_t a) const { return height_[a]; }
  int max_height() const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Every maximal chain has the same length (checked through covers).
  bool is_graded() const;

  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  FinitePoset dual() const;
  /// Induced order on the given elements, renumbered in the given order.
  FinitePoset subposet(const std::vector<std::size_t>& elements) const;

 private:
  void finish();

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<int> height_;
  std::vector<std::string> labels_;
};

struct LatticeReport {
  bool is_lattice = true;
  /// First pair (in index order) lacking a join or a meet.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string missing;  // "join" or "meet"
};

LatticeReport is_lattice(const FinitePoset& poset);

/// All maximal chains, each listed bottom to top; chains are paths in the
/// Hasse diagram from a minimal to a maximal element.
std::vector<std::vector<std::size_t>> maximal_chains(const FinitePoset& poset);

/// Vertices are the poset elements, faces the chains.
SimplicialComplex order_complex(const FinitePoset& poset);

}  // namespace om
