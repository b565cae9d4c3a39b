#include "om/salvetti.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

#include "om/error.hpp"

namespace om {

namespace {

bool cell_less(const SalvettiCell& a, const SalvettiCell& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.covector != b.covector) return a.covector < b.covector;
  return a.tope < b.tope;
}

// [Y, S] <= [X, T]
bool salvetti_leq(const SalvettiCell& lower, const SalvettiCell& upper) {
  return conforms(upper.covector, lower.covector) && compose(lower.covector, upper.tope) == lower.tope;
}

void require_cell(const SalvettiCell& c, const OrientedMatroid& m) {
  if (!m.contains(c.covector) || !m.is_tope(c.tope) || !conforms(c.covector, c.tope)) {
    throw Error(Errc::InvalidCell, c.to_string() + " is not a Salvetti cell");
  }
}

}  // namespace

SalvettiComplex::SalvettiComplex(OrientedMatroid matroid) : matroid_(std::move(matroid)) {
  const int rank = matroid_.rank();
  for (std::size_t i = 0; i < matroid_.covectors().size(); ++i) {
    const SignVector& x = matroid_.covectors()[i];
    for (const SignVector& t : matroid_.topes()) {
      if (conforms(x, t)) cells_.push_back({x, t, rank - matroid_.height_at(i)});
    }
  }
  std::sort(cells_.begin(), cells_.end(), cell_less);
  std::vector<std::string> labels;
  labels.reserve(cells_.size());
  for (const auto& c : cells_) labels.push_back(c.to_string());
  poset_ = FinitePoset::build(
      cells_.size(), [&](std::size_t a, std::size_t b) { return salvetti_leq(cells_[a], cells_[b]); },
      std::move(labels));
}

std::optional<std::size_t> SalvettiComplex::index_of(const SignVector& covector, const SignVector& tope) const {
  if (!matroid_.contains(covector)) return std::nullopt;
  const SalvettiCell key{covector, tope, matroid_.rank() - matroid_.height(covector)};
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), key, cell_less);
  if (it == cells_.end() || !(*it == key)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<SalvettiCell> boundary_cells(const SalvettiCell& c, const OrientedMatroid& m) {
  require_cell(c, m);
  std::vector<SalvettiCell> out;
  for (std::size_t i = 0; i < m.covectors().size(); ++i) {
    const SignVector& y = m.covectors()[i];
    if (y == c.covector || !conforms(c.covector, y)) continue;
    out.push_back({y, compose(y, c.tope), m.rank() - m.height_at(i)});
  }
  std::sort(out.begin(), out.end(), cell_less);
  return out;
}

FVectorEuler f_vector_and_euler(const SalvettiComplex& sal) {
  const int rank = sal.matroid().rank();
  FVectorEuler out;
  out.f.assign(static_cast<std::size_t>(rank + 1), 0);
  for (const auto& c : sal.cells()) ++out.f[c.dim];
  long sign = 1;
  for (std::size_t count : out.f) {
    out.euler += sign * static_cast<long>(count);
    sign = -sign;
  }
  const std::size_t topes = sal.matroid().topes().size();
  if (out.f.front() != topes || out.f.back() != topes) {
    throw Error(Errc::ConsistencyFailure, "f_0 and f_rank must both equal the number of topes");
  }
  if (out.euler != 0) throw Error(Errc::ConsistencyFailure, "Euler characteristic is " + std::to_string(out.euler));
  return out;
}

OrientedSkeleton oriented_one_skeleton(const OrientedMatroid& m) {
  OrientedSkeleton skel;
  skel.vertices = m.topes();
  for (std::size_t i = 0; i < m.covectors().size(); ++i) {
    if (m.height_at(i) != m.rank() - 1) continue;
    const SignVector& x = m.covectors()[i];
    std::vector<SignVector> above;
    for (const auto& t : m.topes()) {
      if (conforms(x, t)) above.push_back(t);
    }
    if (above.size() != 2) {
      throw Error(Errc::ConsistencyFailure, "subtope " + x.to_string() + " lies below " +
                                                std::to_string(above.size()) + " topes");
    }
    skel.edges.push_back({{x, above[0], 1}, above[0], above[1]});
    skel.edges.push_back({{x, above[1], 1}, above[1], above[0]});
  }
  std::sort(skel.edges.begin(), skel.edges.end(), [](const DirectedEdge& a, const DirectedEdge& b) {
    if (a.source != b.source) return a.source < b.source;
    return a.cell.covector < b.cell.covector;
  });
  return skel;
}

NerveReport nerve_check(const OrientedMatroid& m) {
  // vertices of the nerve: pairs (F, T) with F <= T, enumerated directly
  struct Pair {
    SignVector face;
    SignVector tope;
  };
  std::vector<Pair> pairs;
  for (const auto& f : m.covectors()) {
    for (const auto& t : m.topes()) {
      if (conforms(f, t)) pairs.push_back({f, t});
    }
  }
  // W(F1,T1) meets W(F2,T2) iff F1 <= F2 and T2 = F2 o T1
  auto meets = [](const Pair& a, const Pair& b) {
    return conforms(a.face, b.face) && b.tope == compose(b.face, a.tope);
  };
  const std::size_t n = pairs.size();
  std::vector<FinitePoset::Bitset> adjacent(n, FinitePoset::Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (meets(pairs[i], pairs[j]) || meets(pairs[j], pairs[i]))) adjacent[i].set(j);
    }
  }

  // maximal cliques (Bron-Kerbosch with pivoting)
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> current;
  auto expand = [&](auto&& self, FinitePoset::Bitset candidates, FinitePoset::Bitset excluded) -> void {
    if (candidates.none() && excluded.none()) {
      cliques.push_back(current);
      return;
    }
    const FinitePoset::Bitset pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t best = 0;
    for (std::size_t u = pool.find_first(); u != FinitePoset::Bitset::npos; u = pool.find_next(u)) {
      const std::size_t c = (candidates & adjacent[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    const FinitePoset::Bitset branch = candidates - adjacent[pivot];
    for (std::size_t v = branch.find_first(); v != FinitePoset::Bitset::npos; v = branch.find_next(v)) {
      current.push_back(v);
      self(self, candidates & adjacent[v], excluded & adjacent[v]);
      current.pop_back();
      candidates.reset(v);
      excluded.set(v);
    }
  };
  FinitePoset::Bitset all(n);
  all.set();
  expand(expand, all, FinitePoset::Bitset(n));

  // relabel the nerve onto the Salvetti cell numbering
  const SalvettiComplex sal(m);
  NerveReport report;
  report.vertices = n;
  if (n != sal.cells().size()) {
    report.witness = "nerve has " + std::to_string(n) + " vertices, Salvetti poset has " +
                     std::to_string(sal.cells().size());
    return report;
  }
  std::vector<std::size_t> to_cell(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = sal.index_of(pairs[i].face, pairs[i].tope);
    if (!idx) {
      report.witness = "pair (" + pairs[i].face.to_string() + "," + pairs[i].tope.to_string() + ") is not a cell";
      return report;
    }
    to_cell[i] = *idx;
  }
  std::vector<std::vector<std::size_t>> facets;
  facets.reserve(cliques.size());
  for (const auto& clique : cliques) {
    std::vector<std::size_t> f;
    for (std::size_t v : clique) f.push_back(to_cell[v]);
    std::sort(f.begin(), f.end());
    // pairwise intersection must already force a chain
    for (std::size_t a = 0; a < f.size() && report.cliques_are_chains; ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        if (!sal.poset().comparable(f[a], f[b])) {
          report.cliques_are_chains = false;
          break;
        }
      }
    }
    facets.push_back(std::move(f));
  }
  const SimplicialComplex nerve(n, facets, sal.poset().labels());
  const SimplicialComplex barycentric = order_complex(sal.poset());
  report.facets = nerve.facets().size();
  report.faces = 0;
  for (std::size_t c : nerve.f_vector()) report.faces += c;
  report.identical = same_faces(nerve, barycentric) && report.cliques_are_chains;
  if (!report.identical) {
    const auto& a = nerve.faces();
    const auto& b = barycentric.faces();
    for (std::size_t d = 0; d < std::max(a.size(), b.size()) && report.witness.empty(); ++d) {
      const std::vector<Simplex> empty;
      const auto& fa = d < a.size() ? a[d] : empty;
      const auto& fb = d < b.size() ? b[d] : empty;
      std::vector<Simplex> diff;
      std::set_symmetric_difference(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(diff));
      if (!diff.empty()) {
        std::string w = "face {";
        for (std::size_t i = 0; i < diff.front().size(); ++i) {
          if (i) w += ' ';
          w += sal.cells()[diff.front()[i]].to_string();
        }
        report.witness = w + "} differs";
      }
    }
    if (report.witness.empty()) report.witness = "pairwise-intersecting family is not a chain";
  }
  return report;
}

bool retraction_check(const OrientedMatroid& m, const SignVector& tope) {
  if (!m.is_tope(tope)) throw Error(Errc::NotATope, tope.to_string());
  const SalvettiComplex sal(m);
  const auto& cv = m.covectors();
  std::vector<std::size_t> section(cv.size());
  for (std::size_t i = 0; i < cv.size(); ++i) {
    const auto idx = sal.index_of(cv[i], compose(cv[i], tope));
    if (!idx) return false;
    section[i] = *idx;
  }
  // (a) X <= X' in L  =>  [X', X' o T] <= [X, X o T]
  for (std::size_t i = 0; i < cv.size(); ++i) {
    for (std::size_t j = 0; j < cv.size(); ++j) {
      if (m.face_poset().leq(i, j) && !sal.poset().leq(section[j], section[i])) return false;
    }
  }
  // (b) c <= d in the Salvetti poset  =>  covector(d) <= covector(c)
  const auto& cells = sal.cells();
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (sal.poset().leq(a, b) && !conforms(cells[b].covector, cells[a].covector)) return false;
    }
  }
  // (c) the composite is the identity on L
  for (std::size_t i = 0; i < cv.size(); ++i) {
    if (cells[section[i]].covector != cv[i]) return false;
  }
  return true;
}

bool chain_determination_check(const SalvettiComplex& sal) {
  const SimplicialComplex chains = order_complex(sal.poset());
  const auto& cells = sal.cells();
  std::set<std::pair<std::vector<SignVector>, SignVector>> keys;
  std::size_t total = 0;
  for (const auto& group : chains.faces()) {
    for (const Simplex& chain : group) {
      // the top of a chain is the element above all others
      std::uint32_t top = chain.front();
      for (std::uint32_t c : chain) {
        if (sal.poset().leq(top, c)) top = c;
      }
      const SignVector& t1 = cells[top].tope;
      std::vector<SignVector> covectors;
      for (std::uint32_t c : chain) {
        if (!sal.poset().leq(c, top)) return false;
        if (cells[c].tope != compose(cells[c].covector, t1)) return false;
        covectors.push_back(cells[c].covector);
      }
      std::sort(covectors.begin(), covectors.end());
      keys.emplace(std::move(covectors), t1);
      ++total;
    }
  }
  return keys.size() == total;
}

bool boundary_coherence_check(const SalvettiComplex& sal) {
  const auto& cells = sal.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<std::size_t> from_formula;
    for (const auto& b : boundary_cells(cells[i], sal.matroid())) {
      const auto idx = sal.index_of(b.covector, b.tope);
      if (!idx) return false;
      from_formula.push_back(*idx);
    }
    std::sort(from_formula.begin(), from_formula.end());
    std::vector<std::size_t> below;
    const auto& down = sal.poset().down_set(i);
    for (std::size_t j = down.find_first(); j != FinitePoset::Bitset::npos; j = down.find_next(j)) {
      if (j != i) below.push_back(j);
    }
    if (below != from_formula) return false;
  }
  return true;
}

bool diamond_check(const FinitePoset& poset) {
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t m : poset.upper_covers(a)) {
      for (std::size_t b : poset.upper_covers(m)) {
        const auto between = (poset.up_set(a) & poset.down_set(b)).count() - 2;
        if (between != 2) return false;
      }
    }
  }
  return true;
}

void write_poset(std::ostream& out, const SalvettiComplex& sal) {
  for (const auto& c : sal.cells()) {
    out << c.dim << ' ' << c.covector.to_string() << ' ' << c.tope.to_string() << '\n';
  }
  for (auto [lo, hi] : sal.poset().covers()) out << lo + 1 << ' ' << hi + 1 << '\n';
}

}  // namespace om
