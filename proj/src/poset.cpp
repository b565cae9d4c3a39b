#include "om/poset.hpp"

#include <algorithm>
#include <numeric>

#include "om/error.hpp"
#include "om/simplicial.hpp"

namespace om {

namespace {

std::string name_of(const std::vector<std::string>& labels, std::size_t a) {
  return labels.empty() || labels[a].empty() ? std::to_string(a) : labels[a];
}

std::vector<std::string> default_labels(std::size_t size, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.resize(size);
    for (std::size_t i = 0; i < size; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != size) throw Error(Errc::InvalidComplex, "label count does not match element count");
  return labels;
}

}  // namespace

FinitePoset FinitePoset::build(std::size_t size, const Relation& leq, std::vector<std::string> labels) {
  FinitePoset p;
  p.labels_ = default_labels(size, std::move(labels));
  p.up_.assign(size, Bitset(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (leq(a, b)) p.up_[a].set(b);
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    if (!p.up_[a][a]) throw Error(Errc::NotReflexive, "element " + name_of(p.labels_, a) + " is not <= itself");
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (p.up_[a][b] && p.up_[b][a]) {
        throw Error(Errc::NotAntisymmetric,
                    "witness pair (" + name_of(p.labels_, a) + ", " + name_of(p.labels_, b) + ")");
      }
    }
  }
  // transitivity: b in up(a) implies up(b) within up(a)
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = p.up_[a].find_first(); b != Bitset::npos; b = p.up_[a].find_next(b)) {
      if (!p.up_[b].is_subset_of(p.up_[a])) {
        const Bitset missing = p.up_[b] - p.up_[a];
        const std::size_t c = missing.find_first();
        throw Error(Errc::NotTransitive, "witness triple (" + name_of(p.labels_, a) + ", " +
                                             name_of(p.labels_, b) + ", " + name_of(p.labels_, c) + ")");
      }
    }
  }
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_covers(std::size_t size,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                     std::vector<std::string> labels) {
  std::vector<std::vector<std::size_t>> succ(size);
  for (auto [lo, hi] : covers) {
    if (lo >= size || hi >= size) throw Error(Errc::InvalidComplex, "cover refers to an unknown element");
    succ[lo].push_back(hi);
  }
  std::vector<Bitset> reach(size, Bitset(size));
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<std::size_t> stack{a};
    reach[a].set(a);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : succ[x]) {
        if (!reach[a][y]) {
          reach[a].set(y);
          stack.push_back(y);
        }
      }
    }
  }
  return build(size, [&](std::size_t a, std::size_t b) { return reach[a][b]; }, std::move(labels));
}

void FinitePoset::finish() {
  const std::size_t n = size();
  down_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = up_[a].find_first(); b != Bitset::npos; b = up_[a].find_next(b)) down_[b].set(a);
  }
  covers_.clear();
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) {
    Bitset below = down_[b];
    below.reset(b);
    for (std::size_t a = below.find_first(); a != Bitset::npos; a = below.find_next(a)) {
      Bitset between = up_[a] & below;
      between.reset(a);
      if (between.none()) covers_.emplace_back(a, b);
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto [a, b] : covers_) {
    upper_covers_[a].push_back(b);
    lower_covers_[b].push_back(a);
  }
  // heights in order of increasing down-set size (a linear extension)
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return down_[x].count() < down_[y].count(); });
  height_.assign(n, 0);
  for (std::size_t b : order) {
    for (std::size_t a : lower_covers_[b]) height_[b] = std::max(height_[b], height_[a] + 1);
  }
}

int FinitePoset::max_height() const {
  return height_.empty() ? -1 : *std::max_element(height_.begin(), height_.end());
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (lower_covers_[a].empty()) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (upper_covers_[a].empty()) out.push_back(a);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  const auto mins = minimal_elements();
  if (mins.size() == 1) return mins.front();
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  const auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

bool FinitePoset::is_graded() const {
  // every cover raises the longest-chain height by exactly one, and all
  // maximal elements share a height
  for (auto [a, b] : covers_) {
    if (height_[a] + 1 != height_[b]) return false;
  }
  const auto maxs = maximal_elements();
  for (std::size_t m : maxs) {
    if (height_[m] != height_[maxs.front()]) return false;
  }
  return true;
}

FinitePoset FinitePoset::dual() const {
  return build(size(), [&](std::size_t a, std::size_t b) { return up_[b][a]; }, labels_);
}

FinitePoset FinitePoset::subposet(const std::vector<std::size_t>& elements) const {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (std::size_t e : elements) labels.push_back(labels_[e]);
  return build(
      elements.size(), [&](std::size_t a, std::size_t b) { return up_[elements[a]][elements[b]]; },
      std::move(labels));
}

LatticeReport is_lattice(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  LatticeReport report;
  auto has_extreme = [](const FinitePoset::Bitset& bounds, auto&& cone) {
    for (std::size_t u = bounds.find_first(); u != FinitePoset::Bitset::npos; u = bounds.find_next(u)) {
      if (bounds.is_subset_of(cone(u))) return true;
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto upper = poset.up_set(a) & poset.up_set(b);
      if (!has_extreme(upper, [&](std::size_t u) -> const FinitePoset::Bitset& { return poset.up_set(u); })) {
        return {false, std::pair{a, b}, "join"};
      }
      const auto lower = poset.down_set(a) & poset.down_set(b);
      if (!has_extreme(lower, [&](std::size_t u) -> const FinitePoset::Bitset& { return poset.down_set(u); })) {
        return {false, std::pair{a, b}, "meet"};
      }
    }
  }
  return report;
}

std::vector<std::vector<std::size_t>> maximal_chains(const FinitePoset& poset) {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t x) -> void {
    current.push_back(x);
    const auto& ups = poset.upper_covers(x);
    if (ups.empty()) {
      chains.push_back(current);
    } else {
      for (std::size_t y : ups) self(self, y);
    }
    current.pop_back();
  };
  for (std::size_t m : poset.minimal_elements()) extend(extend, m);
  return chains;
}

SimplicialComplex order_complex(const FinitePoset& poset) {
  return SimplicialComplex(poset.size(), maximal_chains(poset), poset.labels());
}

}  // namespace om
