#include "om/topes.hpp"

#include <algorithm>
#include <map>

#include "om/error.hpp"
#include "om/mh_complex.hpp"

namespace om {

namespace {

void require_tope(const OrientedMatroid& m, const SignVector& t) {
  if (!m.is_tope(t)) throw Error(Errc::NotATope, t.to_string() + " is not a tope");
}

// Adjacent topes with the subtope between them, keyed by tope index.
struct TopeGraph {
  std::vector<SignVector> topes;
  std::map<SignVector, std::size_t> index;
  // (neighbor, subtope covector)
  std::vector<std::vector<std::pair<std::size_t, SignVector>>> out;
};

TopeGraph tope_graph(const OrientedMatroid& m) {
  TopeGraph g;
  g.topes = m.topes();
  for (std::size_t i = 0; i < g.topes.size(); ++i) g.index.emplace(g.topes[i], i);
  g.out.assign(g.topes.size(), {});
  for (const auto& edge : oriented_one_skeleton(m).edges) {
    g.out[g.index.at(edge.source)].emplace_back(g.index.at(edge.target), edge.cell.covector);
  }
  return g;
}

}  // namespace

int tope_distance(const OrientedMatroid& m, const SignVector& t, const SignVector& s) {
  require_tope(m, t);
  require_tope(m, s);
  return separation_set(t, s).size();
}

TopePoset tope_poset(const OrientedMatroid& m, const SignVector& base, TopeOrder order) {
  require_tope(m, base);
  TopePoset tp;
  tp.base = base;
  tp.topes = m.topes();
  std::vector<std::string> labels;
  for (const auto& t : tp.topes) labels.push_back(t.to_string());
  const auto& ts = tp.topes;
  if (order == TopeOrder::SeparationInclusion) {
    tp.poset = FinitePoset::build(
        ts.size(),
        [&](std::size_t a, std::size_t b) {
          return separation_set(base, ts[a]).is_subset_of(separation_set(base, ts[b]));
        },
        std::move(labels));
  } else {
    tp.poset = FinitePoset::build(
        ts.size(),
        [&](std::size_t a, std::size_t b) {
          return separation_set(base, ts[a]).size() <= separation_set(base, ts[b]).size();
        },
        std::move(labels));
  }
  return tp;
}

SimplicialReport is_simplicial(const OrientedMatroid& m) {
  const int r = m.rank();
  for (const auto& t : m.topes()) {
    std::vector<SignVector> interval;
    std::vector<SignVector> atoms;
    for (std::size_t i = 0; i < m.covectors().size(); ++i) {
      const SignVector& x = m.covectors()[i];
      if (!conforms(x, t)) continue;
      interval.push_back(x);
      if (m.height_at(i) == 1) atoms.push_back(x);
    }
    bool boolean = static_cast<int>(atoms.size()) == r && interval.size() == (std::size_t{1} << r);
    if (boolean) {
      // joins of atom subsets must be distinct and order must match inclusion
      std::vector<SignVector> joins(std::size_t{1} << r, SignVector(m.ground_size()));
      for (std::uint32_t mask = 0; mask < joins.size(); ++mask) {
        for (int a = 0; a < r; ++a) {
          if ((mask >> a) & 1u) joins[mask] = compose(joins[mask], atoms[a]);
        }
      }
      std::vector<SignVector> sorted = joins;
      std::sort(sorted.begin(), sorted.end());
      std::vector<SignVector> sorted_interval = interval;
      std::sort(sorted_interval.begin(), sorted_interval.end());
      boolean = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == sorted_interval;
      for (std::uint32_t a = 0; a < joins.size() && boolean; ++a) {
        for (std::uint32_t b = 0; b < joins.size(); ++b) {
          if (conforms(joins[a], joins[b]) != ((a & ~b) == 0)) {
            boolean = false;
            break;
          }
        }
      }
    }
    if (!boolean) return {false, t};
  }
  return {};
}

LatticeEquivalenceReport lattice_equivalence_check(const OrientedMatroid& m) {
  LatticeEquivalenceReport report;
  const SimplicialReport simp = is_simplicial(m);
  report.simplicial = simp.simplicial;
  report.non_simplicial_tope = simp.witness;
  for (const auto& t : m.topes()) {
    const LatticeReport lr = is_lattice(tope_poset(m, t).poset);
    if (!lr.is_lattice && report.all_lattices) {
      report.all_lattices = false;
      report.non_lattice_base = t;
      report.non_lattice = lr;
    }
  }
  if (report.simplicial != report.all_lattices) {
    throw Error(Errc::EquivalenceViolation,
                std::string("simplicial=") + (report.simplicial ? "true" : "false") +
                    " but all tope posets lattices=" + (report.all_lattices ? "true" : "false"));
  }
  report.kpi1_predicted = report.simplicial;
  return report;
}

namespace {

std::vector<PositivePath> enumerate_paths(const TopeGraph& g, const SignVector& t, const SignVector& s) {
  const std::size_t target = g.index.at(s);
  std::vector<PositivePath> paths;
  PositivePath current{t, s, {}, {}};
  auto walk = [&](auto&& self, std::size_t at) -> void {
    if (at == target) {
      paths.push_back(current);
      return;
    }
    const int remaining = separation_set(g.topes[at], s).size();
    for (const auto& [next, subtope] : g.out[at]) {
      if (separation_set(g.topes[next], s).size() != remaining - 1) continue;
      const ElementSet crossed = separation_set(g.topes[at], g.topes[next]);
      current.edges.push_back({subtope, g.topes[at], 1});
      for (int e : crossed.elements()) current.crossed.push_back(e);
      self(self, next);
      current.edges.pop_back();
      current.crossed.resize(current.crossed.size() - static_cast<std::size_t>(crossed.size()));
    }
  };
  walk(walk, g.index.at(t));
  std::sort(paths.begin(), paths.end(),
            [](const PositivePath& a, const PositivePath& b) { return a.crossed < b.crossed; });
  for (const auto& path : paths) {
    if (!crosses_separation_once(path)) {
      throw Error(Errc::ConsistencyFailure, "minimal path " + t.to_string() + " -> " + s.to_string() +
                                                " does not cross each separating element once");
    }
  }
  return paths;
}

}  // namespace

std::vector<PositivePath> minimal_positive_paths(const OrientedMatroid& m, const SignVector& t, const SignVector& s) {
  require_tope(m, t);
  require_tope(m, s);
  return enumerate_paths(tope_graph(m), t, s);
}

std::uint64_t count_minimal_positive_paths(const OrientedMatroid& m, const SignVector& t, const SignVector& s) {
  require_tope(m, t);
  require_tope(m, s);
  const TopeGraph g = tope_graph(m);
  std::vector<std::uint64_t> ways(g.topes.size(), 0);
  std::vector<std::size_t> order(g.topes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // closer to s first
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return separation_set(g.topes[a], s).size() < separation_set(g.topes[b], s).size();
  });
  ways[g.index.at(s)] = 1;
  for (std::size_t at : order) {
    const int remaining = separation_set(g.topes[at], s).size();
    for (const auto& [next, subtope] : g.out[at]) {
      if (separation_set(g.topes[next], s).size() == remaining - 1) ways[at] += ways[next];
    }
  }
  return ways[g.index.at(t)];
}

bool crosses_separation_once(const PositivePath& path) {
  std::vector<int> expected = separation_set(path.from, path.to).elements();
  std::vector<int> seen = path.crossed;
  std::sort(seen.begin(), seen.end());
  return seen == expected;
}

DistanceAgreement distance_agreement_check(const OrientedMatroid& m) {
  const SalvettiComplex sal(m);
  const CWPoset sq = CWPoset::from_salvetti(sal);
  const CWPoset dq = dual_complex(m);
  const DistanceMatrix sd = skeleton_distances(sq).global;
  const DistanceMatrix dd = skeleton_distances(dq).global;
  std::map<SignVector, std::size_t> s_pos, d_pos;
  for (std::size_t i = 0; i < sq.vertices().size(); ++i) s_pos.emplace(sal.cells()[sq.vertices()[i]].tope, i);
  for (std::size_t i = 0; i < dq.vertices().size(); ++i) d_pos.emplace(m.covectors()[dq.vertices()[i]], i);
  DistanceAgreement report;
  for (const auto& t : m.topes()) {
    for (const auto& s : m.topes()) {
      const int sep = separation_set(t, s).size();
      const int a = sd(s_pos.at(t), s_pos.at(s));
      const int b = dd(d_pos.at(t), d_pos.at(s));
      if (sep != a || sep != b) return {false, std::pair{t, s}, sep, a, b};
    }
  }
  return report;
}

bool tope_poset_duality_check(const TopePoset& tp) {
  const std::size_t n = tp.topes.size();
  const ElementSet all = separation_set(tp.base, -tp.base);
  std::map<ElementSet, std::size_t> by_sep;
  for (std::size_t i = 0; i < n; ++i) by_sep.emplace(separation_set(tp.base, tp.topes[i]), i);
  if (by_sep.size() != n) return false;
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = by_sep.find(all - separation_set(tp.base, tp.topes[i]));
    if (it == by_sep.end()) return false;
    image[i] = it->second;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (tp.poset.leq(a, b) != tp.poset.leq(image[b], image[a])) return false;
    }
  }
  return true;
}

bool antipodal_extension_check(const OrientedMatroid& m) {
  const TopeGraph g = tope_graph(m);
  // greedy completion S -> -T: step to any neighbour one crossing closer
  auto complete = [&](const SignVector& from, const SignVector& to) {
    std::vector<int> crossed;
    std::size_t at = g.index.at(from);
    while (g.topes[at] != to) {
      const int remaining = separation_set(g.topes[at], to).size();
      bool moved = false;
      for (const auto& [next, subtope] : g.out[at]) {
        if (separation_set(g.topes[next], to).size() == remaining - 1) {
          for (int e : separation_set(g.topes[at], g.topes[next]).elements()) crossed.push_back(e);
          at = next;
          moved = true;
          break;
        }
      }
      if (!moved) return std::optional<std::vector<int>>{};
    }
    return std::optional<std::vector<int>>{crossed};
  };
  for (const auto& t : m.topes()) {
    const SignVector anti = -t;
    if (!m.is_tope(anti)) return false;
    for (const auto& s : m.topes()) {
      const auto tail = complete(s, anti);
      if (!tail) return false;
      for (const auto& path : enumerate_paths(g, t, s)) {
        PositivePath extended{t, anti, path.edges, path.crossed};
        extended.crossed.insert(extended.crossed.end(), tail->begin(), tail->end());
        if (!crosses_separation_once(extended)) return false;
      }
    }
  }
  return true;
}

}  // namespace om
