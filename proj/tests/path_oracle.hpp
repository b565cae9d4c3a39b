#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "om/oriented_matroid.hpp"
#include "oracles.hpp"

namespace oracle {

// directed walks of length d(T,S) in the doubled tope graph, where a 1-cell is
// any covector lying under exactly two topes
inline std::uint64_t path_count(const om::OrientedMatroid& m, const om::SignVector& t, const om::SignVector& s) {
  const auto& topes = m.topes();
  std::map<om::SignVector, std::size_t> index;
  for (std::size_t i = 0; i < topes.size(); ++i) index[topes[i]] = i;
  std::vector<std::vector<std::uint64_t>> adj(topes.size(), std::vector<std::uint64_t>(topes.size(), 0));
  for (const auto& x : m.covectors()) {
    std::vector<std::size_t> above;
    for (std::size_t i = 0; i < topes.size(); ++i)
      if (om::conforms(x, topes[i])) above.push_back(i);
    if (above.size() == 2) {
      ++adj[above[0]][above[1]];
      ++adj[above[1]][above[0]];
    }
  }
  int d = 0;
  for (int e = 0; e < m.ground_size(); ++e) d += t[e] != s[e];
  return walk_counts(adj, d)[index[t]][index[s]];
}

}  // namespace oracle
