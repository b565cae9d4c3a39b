#include "om/os_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "om/error.hpp"
#include "om/poset.hpp"
#include "om/salvetti.hpp"

namespace om {

UnderlyingMatroid::UnderlyingMatroid(int n, std::vector<ElementSet> flats) : n_(n), flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end());
  flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
  if (flats_.empty() || flats_.back() != ElementSet::full(n_)) {
    throw Error(Errc::ConsistencyFailure, "ground set is not a flat");
  }
  const std::set<ElementSet> lookup(flats_.begin(), flats_.end());
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    for (std::size_t j = i + 1; j < flats_.size(); ++j) {
      if (!lookup.count(flats_[i] & flats_[j])) {
        throw Error(Errc::ConsistencyFailure,
                    "flats " + flats_[i].to_string() + " and " + flats_[j].to_string() + " meet outside the family");
      }
    }
  }
  // sorted by size, so proper subsets come first
  flat_rank_.assign(flats_.size(), 0);
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (flats_[j] != flats_[i] && flats_[j].is_subset_of(flats_[i])) {
        flat_rank_[i] = std::max(flat_rank_[i], flat_rank_[j] + 1);
      }
    }
  }
}

ElementSet UnderlyingMatroid::closure(ElementSet s) const {
  for (const auto& f : flats_) {
    if (s.is_subset_of(f)) return f;  // the first hit is the smallest, by intersection-closure
  }
  return ElementSet::full(n_);
}

int UnderlyingMatroid::rank_of_flat(ElementSet flat) const {
  const auto it = std::lower_bound(flats_.begin(), flats_.end(), flat);
  if (it == flats_.end() || *it != flat) throw Error(Errc::ConsistencyFailure, flat.to_string() + " is not a flat");
  return flat_rank_[static_cast<std::size_t>(it - flats_.begin())];
}

bool UnderlyingMatroid::is_graded() const {
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    for (std::size_t j = 0; j < flats_.size(); ++j) {
      if (flats_[i] == flats_[j] || !flats_[i].is_subset_of(flats_[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < flats_.size() && cover; ++k) {
        if (k != i && k != j && flats_[i].is_subset_of(flats_[k]) && flats_[k].is_subset_of(flats_[j])) cover = false;
      }
      if (cover && flat_rank_[j] != flat_rank_[i] + 1) return false;
    }
  }
  return true;
}

UnderlyingMatroid flats_from_covectors(const OrientedMatroid& m) {
  std::vector<ElementSet> flats;
  for (const auto& x : m.covectors()) flats.push_back(x.zero_set());
  return UnderlyingMatroid(m.ground_size(), std::move(flats));
}

std::vector<ElementSet> circuits(const UnderlyingMatroid& u) {
  const int n = u.ground_size();
  std::vector<ElementSet> subsets;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) subsets.push_back(ElementSet(bits));
  std::sort(subsets.begin(), subsets.end());
  std::vector<ElementSet> out;
  for (const auto& s : subsets) {
    if (u.is_independent(s)) continue;
    const bool minimal = std::none_of(out.begin(), out.end(), [&](ElementSet c) { return c.is_subset_of(s); });
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> NbcTable::counts() const {
  std::vector<std::size_t> c;
  for (const auto& level : nbc) c.push_back(level.size());
  return c;
}

NbcTable nbc_sets(const UnderlyingMatroid& u, std::vector<int> order) {
  const int n = u.ground_size();
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] >= 0) {
      throw Error(Errc::ParseError, "element order is not a permutation");
    }
    position[order[i]] = static_cast<int>(i);
  }
  if (order.size() != static_cast<std::size_t>(n)) throw Error(Errc::ParseError, "element order is not a permutation");

  NbcTable table;
  table.order = order;
  table.circuits = circuits(u);
  for (const auto& c : table.circuits) {
    int least = -1;
    for (int e : c.elements()) {
      if (least < 0 || position[e] < position[least]) least = e;
    }
    table.broken_circuits.push_back(c - ElementSet::of({least}));
  }
  std::sort(table.broken_circuits.begin(), table.broken_circuits.end());
  table.nbc.assign(static_cast<std::size_t>(u.rank()) + 1, {});
  std::vector<ElementSet> subsets;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) subsets.push_back(ElementSet(bits));
  std::sort(subsets.begin(), subsets.end());
  for (const auto& s : subsets) {
    if (!u.is_independent(s)) continue;
    const bool clean = std::none_of(table.broken_circuits.begin(), table.broken_circuits.end(),
                                    [&](ElementSet b) { return b.is_subset_of(s); });
    if (clean) table.nbc[static_cast<std::size_t>(s.size())].push_back(s);
  }
  return table;
}

std::vector<std::size_t> os_betti(const UnderlyingMatroid& u) {
  const auto forward = nbc_sets(u).counts();
  std::vector<int> reversed(static_cast<std::size_t>(u.ground_size()));
  std::iota(reversed.rbegin(), reversed.rend(), 0);
  if (nbc_sets(u, reversed).counts() != forward) {
    throw Error(Errc::ConsistencyFailure, "nbc counts depend on the element order");
  }
  return forward;
}

std::vector<HomologyGroup> salvetti_homology(const OrientedMatroid& m) {
  return homology(order_complex(SalvettiComplex(m).poset()));
}

GrComparison gr_comparison(const OrientedMatroid& m) {
  GrComparison out;
  const auto groups = salvetti_homology(m);
  out.homology_ranks = betti_numbers(groups);
  for (const auto& g : groups) out.torsion.push_back(g.torsion);
  out.os_betti = os_betti(flats_from_covectors(m));
  const std::size_t degrees = std::max(out.homology_ranks.size(), out.os_betti.size());
  for (std::size_t k = 0; k < degrees; ++k) {
    const std::size_t h = k < out.homology_ranks.size() ? out.homology_ranks[k] : 0;
    const std::size_t b = k < out.os_betti.size() ? out.os_betti[k] : 0;
    if (h != b) {
      throw Error(Errc::ComparisonFailure, "degree " + std::to_string(k) + ": rank H = " + std::to_string(h) +
                                               ", nbc count = " + std::to_string(b));
    }
    if (k < out.torsion.size() && !out.torsion[k].empty()) {
      throw Error(Errc::ComparisonFailure, "degree " + std::to_string(k) + ": torsion in homology");
    }
  }
  for (std::size_t k = 0; k < out.os_betti.size(); ++k) {
    out.alternating_sum += (k % 2 == 0 ? 1 : -1) * static_cast<long>(out.os_betti[k]);
  }
  if (m.ground_size() > 0 && out.alternating_sum != 0) {
    throw Error(Errc::ComparisonFailure, "alternating sum of nbc counts is " + std::to_string(out.alternating_sum));
  }
  return out;
}

}  // namespace om
