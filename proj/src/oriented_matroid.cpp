#include "om/oriented_matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "om/error.hpp"

namespace om {

namespace {

using CovectorSet = std::unordered_set<SignVector, SignVectorHash>;

std::vector<SignVector> canonical(std::span<const SignVector> input) {
  std::vector<SignVector> out(input.begin(), input.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_common_length(std::span<const SignVector> vectors) {
  if (vectors.empty()) throw Error(Errc::EmptyInput, "no sign vectors given");
  for (const auto& x : vectors) {
    if (x.size() != vectors.front().size()) {
      throw Error(Errc::LengthMismatch, x.to_string() + " vs " + vectors.front().to_string());
    }
  }
}

int tuple_parity_sort(std::vector<int>& tuple) {
  int parity = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[j] < tuple[i]) parity ^= 1;
    }
  }
  std::sort(tuple.begin(), tuple.end());
  return parity;
}

}  // namespace

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::V0: return "V0";
    case Axiom::V1: return "V1";
    case Axiom::V2: return "V2";
    case Axiom::V3: return "V3";
  }
  return "?";
}

std::string AxiomReport::describe() const {
  if (pass()) return "all covector axioms hold";
  std::string out = std::string(to_string(*failed)) + " fails";
  if (x) out += " X=" + x->to_string();
  if (y) out += " Y=" + y->to_string();
  if (element) out += " e=" + std::to_string(*element + 1);
  return out;
}

AxiomReport verify_axioms(std::span<const SignVector> candidate) {
  require_common_length(candidate);
  const int n = candidate.front().size();
  const std::vector<SignVector> set = canonical(candidate);
  const CovectorSet lookup(set.begin(), set.end());
  AxiomReport report;
  auto fail = [&](Axiom a) {
    report.holds[static_cast<std::size_t>(a)] = false;
    return !report.failed;
  };

  if (!lookup.count(SignVector(n))) {
    if (fail(Axiom::V0)) report.failed = Axiom::V0;
  }
  for (const auto& x : set) {
    if (!lookup.count(-x)) {
      if (fail(Axiom::V1)) {
        report.failed = Axiom::V1;
        report.x = x;
      }
      break;
    }
  }
  [&] {
    for (const auto& x : set) {
      for (const auto& y : set) {
        if (!lookup.count(compose(x, y))) {
          if (fail(Axiom::V2)) {
            report.failed = Axiom::V2;
            report.x = x;
            report.y = y;
          }
          return;
        }
      }
    }
  }();
  // V3 is symmetric in X and Y since X o Y and Y o X agree off S(X,Y)
  std::vector<std::vector<const SignVector*>> zero_at(static_cast<std::size_t>(n));
  for (const auto& z : set) {
    for (int e : z.zero_set().elements()) zero_at[e].push_back(&z);
  }
  [&] {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        const SignVector& x = set[i];
        const SignVector& y = set[j];
        const ElementSet sep = separation_set(x, y);
        if (sep.empty()) continue;
        const SignVector xy = compose(x, y);
        const std::uint32_t fixed = ~sep.bits();
        const std::uint32_t want_plus = xy.plus_bits() & fixed;
        const std::uint32_t want_minus = xy.minus_bits() & fixed;
        for (int e : sep.elements()) {
          const bool found = std::any_of(zero_at[e].begin(), zero_at[e].end(), [&](const SignVector* z) {
            return (z->plus_bits() & fixed) == want_plus && (z->minus_bits() & fixed) == want_minus;
          });
          if (!found) {
            if (fail(Axiom::V3)) {
              report.failed = Axiom::V3;
              report.x = x;
              report.y = y;
              report.element = e;
            }
            return;
          }
        }
      }
    }
  }();
  return report;
}

Chirotope::Chirotope(int rank, int n) : rank_(rank), n_(n) {
  if (rank < 0 || n < 0 || rank > n || n > kMaxGroundSize) {
    throw Error(Errc::SizeLimit, "invalid chirotope shape r=" + std::to_string(rank) + " n=" + std::to_string(n));
  }
}

Chirotope::Chirotope(int rank, int n, const std::vector<Sign>& colex_values) : Chirotope(rank, n) {
  const auto subsets = colex_subsets(n, rank);
  if (subsets.size() != colex_values.size()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(subsets.size()) + " chirotope values, got " +
                                          std::to_string(colex_values.size()));
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (colex_values[i] != Sign::Zero) values_[subsets[i].bits()] = colex_values[i];
  }
  require_nondegenerate();
}

Chirotope Chirotope::from_tuples(int rank, int n, const std::vector<std::pair<std::vector<int>, Sign>>& values) {
  Chirotope chi(rank, n);
  std::map<std::uint32_t, Sign> assigned;
  for (const auto& [tuple, value] : values) {
    if (static_cast<int>(tuple.size()) != rank) throw Error(Errc::LengthMismatch, "tuple of wrong size");
    std::vector<int> sorted = tuple;
    const int parity = tuple_parity_sort(sorted);
    ElementSet basis;
    for (int e : sorted) {
      if (e < 0 || e >= n) throw Error(Errc::LengthMismatch, "tuple element out of range");
      basis.insert(e);
    }
    if (basis.size() != rank) {
      if (value != Sign::Zero) throw Error(Errc::NotAlternating, "nonzero value on a tuple with a repeated element");
      continue;
    }
    const Sign normalized = parity ? -value : value;
    auto [it, inserted] = assigned.emplace(basis.bits(), normalized);
    if (!inserted && it->second != normalized) {
      throw Error(Errc::NotAlternating, "permutations of " + basis.to_string() + " carry inconsistent signs");
    }
  }
  for (auto [bits, s] : assigned) {
    if (s != Sign::Zero) chi.values_[bits] = s;
  }
  chi.require_nondegenerate();
  return chi;
}

Chirotope Chirotope::from_arrangement(const RationalArrangement& arrangement) {
  const int n = static_cast<int>(arrangement.normals.size());
  const int r = arrangement.dimension;
  Chirotope chi(r, n);
  for (ElementSet basis : colex_subsets(n, r)) {
    RationalMatrix minor;
    for (int e : basis.elements()) minor.push_back(arrangement.normals[e]);
    const Sign s = sign_of(determinant(minor));
    if (s != Sign::Zero) chi.values_[basis.bits()] = s;
  }
  chi.require_nondegenerate();
  return chi;
}

std::vector<ElementSet> Chirotope::colex_subsets(int n, int r) {
  std::vector<ElementSet> out;
  if (r > n || r < 0) return out;
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    if (std::popcount(bits) == r) out.emplace_back(static_cast<std::uint32_t>(bits));
  }
  // colex: compare by largest differing element
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int top = 31 - std::countl_zero(diff);
    return b.contains(top);
  });
  return out;
}

Sign Chirotope::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_) throw Error(Errc::LengthMismatch, "tuple of wrong size");
  std::vector<int> sorted(tuple.begin(), tuple.end());
  const int parity = tuple_parity_sort(sorted);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Sign::Zero;
  ElementSet basis;
  for (int e : sorted) basis.insert(e);
  const Sign s = on_basis(basis);
  return parity ? -s : s;
}

Sign Chirotope::on_basis(ElementSet basis) const {
  const auto it = values_.find(basis.bits());
  return it == values_.end() ? Sign::Zero : it->second;
}

void Chirotope::set(ElementSet basis, Sign value) {
  if (basis.size() != rank_) throw Error(Errc::LengthMismatch, "basis of wrong size");
  if (value == Sign::Zero) {
    values_.erase(basis.bits());
  } else {
    values_[basis.bits()] = value;
  }
}

std::vector<Sign> Chirotope::colex_values() const {
  std::vector<Sign> out;
  for (ElementSet basis : colex_subsets(n_, rank_)) out.push_back(on_basis(basis));
  return out;
}

void Chirotope::require_nondegenerate() const {
  if (values_.empty()) throw Error(Errc::DegenerateChirotope, "chirotope is identically zero");
}

OrientedMatroid OrientedMatroid::from_covectors(std::vector<SignVector> covectors) {
  const AxiomReport report = verify_axioms(covectors);
  if (!report.pass()) throw Error(Errc::AxiomFailure, report.describe());
  OrientedMatroid m;
  m.covectors_ = canonical(covectors);
  m.n_ = m.covectors_.front().size();
  for (std::size_t i = 0; i < m.covectors_.size(); ++i) m.index_.emplace(m.covectors_[i], i);
  const auto& cv = m.covectors_;
  m.face_poset_ = FinitePoset::build(
      cv.size(), [&](std::size_t a, std::size_t b) { return conforms(cv[a], cv[b]); },
      [&] {
        std::vector<std::string> labels;
        for (const auto& x : cv) labels.push_back(x.to_string());
        return labels;
      }());
  if (!m.face_poset_.is_graded()) throw Error(Errc::NotGraded, "covector poset is not graded");
  m.rank_ = m.face_poset_.max_height();
  for (std::size_t i = 0; i < cv.size(); ++i) {
    if (m.face_poset_.upper_covers(i).empty()) m.topes_.push_back(cv[i]);
    if (m.face_poset_.height(i) == 1) m.cocircuits_.push_back(cv[i]);
  }
  return m;
}

std::optional<std::size_t> OrientedMatroid::index_of(const SignVector& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool OrientedMatroid::is_tope(const SignVector& x) const {
  const auto i = index_of(x);
  return i && face_poset_.upper_covers(*i).empty();
}

int OrientedMatroid::height(const SignVector& x) const {
  const auto i = index_of(x);
  if (!i) throw Error(Errc::InvalidCell, x.to_string() + " is not a covector");
  return face_poset_.height(*i);
}

std::vector<std::size_t> OrientedMatroid::height_profile() const {
  std::vector<std::size_t> profile(static_cast<std::size_t>(rank_ + 1), 0);
  for (std::size_t i = 0; i < covectors_.size(); ++i) ++profile[face_poset_.height(i)];
  return profile;
}

RankHeight rank_and_height(std::span<const SignVector> covectors) {
  require_common_length(covectors);
  const auto cv = canonical(covectors);
  const FinitePoset poset =
      FinitePoset::build(cv.size(), [&](std::size_t a, std::size_t b) { return conforms(cv[a], cv[b]); });
  if (!poset.is_graded()) {
    throw Error(Errc::NotGraded, "maximal chains from the bottom to the topes have different lengths");
  }
  RankHeight out;
  out.rank = poset.max_height();
  for (std::size_t i = 0; i < cv.size(); ++i) out.heights.emplace_back(cv[i], poset.height(i));
  return out;
}

RankHeight rank_and_height(const OrientedMatroid& m) {
  RankHeight out;
  out.rank = m.rank();
  for (std::size_t i = 0; i < m.covectors().size(); ++i) out.heights.emplace_back(m.covectors()[i], m.height_at(i));
  return out;
}

OrientedMatroid from_arrangement(const RationalArrangement& arrangement) {
  const int l = arrangement.dimension;
  const int n = static_cast<int>(arrangement.normals.size());
  if (n == 0) throw Error(Errc::EmptyInput, "arrangement without hyperplanes");
  if (n > kMaxGroundSize) throw Error(Errc::SizeLimit, "too many hyperplanes");
  for (int i = 0; i < n; ++i) {
    const auto& row = arrangement.normals[i];
    if (static_cast<int>(row.size()) != l) {
      throw Error(Errc::LengthMismatch, "normal " + std::to_string(i + 1) + " has wrong dimension");
    }
    if (std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; })) {
      throw Error(Errc::ZeroNormal, "normal " + std::to_string(i + 1) + " is zero");
    }
  }
  if (rank(arrangement.normals) != l) {
    throw Error(Errc::NotEssential, "normals span a proper subspace of Q^" + std::to_string(l));
  }
  std::set<SignVector> cocircuits;
  for (ElementSet subset : Chirotope::colex_subsets(n, l - 1)) {
    RationalMatrix rows;
    for (int e : subset.elements()) rows.push_back(arrangement.normals[e]);
    if (rank(rows) != l - 1) continue;
    const auto kernel = kernel_basis(rows, l);
    SignVector x(n);
    for (int e = 0; e < n; ++e) x.set(e, sign_of(dot(arrangement.normals[e], kernel.front())));
    cocircuits.insert(x);
    cocircuits.insert(-x);
  }
  const std::vector<SignVector> cc(cocircuits.begin(), cocircuits.end());
  return span_from_cocircuits(cc);
}

std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& chi) {
  const int n = chi.ground_size();
  const int r = chi.rank();
  std::set<SignVector> out;
  std::vector<int> tuple(static_cast<std::size_t>(r));
  for (ElementSet subset : Chirotope::colex_subsets(n, r - 1)) {
    const auto elems = subset.elements();
    std::copy(elems.begin(), elems.end(), tuple.begin());
    SignVector c(n);
    for (int f = 0; f < n; ++f) {
      tuple[static_cast<std::size_t>(r - 1)] = f;
      c.set(f, chi(tuple));
    }
    if (c.is_zero()) continue;
    out.insert(c);
    out.insert(-c);
  }
  return {out.begin(), out.end()};
}

OrientedMatroid span_from_cocircuits(std::span<const SignVector> cocircuits) {
  require_common_length(cocircuits);
  const int n = cocircuits.front().size();
  const std::vector<SignVector> generators = canonical(cocircuits);
  CovectorSet seen(generators.begin(), generators.end());
  seen.insert(SignVector(n));
  std::vector<SignVector> frontier = generators;
  while (!frontier.empty()) {
    std::vector<SignVector> next;
    for (const auto& x : frontier) {
      for (const auto& c : generators) {
        SignVector y = compose(x, c);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return OrientedMatroid::from_covectors({seen.begin(), seen.end()});
}

SimplicityReport is_simple(const OrientedMatroid& m) {
  const int n = m.ground_size();
  SimplicityReport report;
  std::uint32_t nonzero = 0;
  for (const auto& x : m.covectors()) nonzero |= x.support().bits();
  report.loops = ElementSet::full(n) - ElementSet(nonzero);
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (report.loops.contains(e) || report.loops.contains(f)) continue;
      bool same = true;
      bool opposite = true;
      for (const auto& x : m.covectors()) {
        same = same && x[e] == x[f];
        opposite = opposite && x[e] == -x[f];
      }
      if (same) report.parallel.emplace_back(e, f);
      if (opposite) report.antiparallel.emplace_back(e, f);
    }
  }
  report.offending = report.loops;
  for (auto [e, f] : report.parallel) report.offending = report.offending | ElementSet::of({e, f});
  for (auto [e, f] : report.antiparallel) report.offending = report.offending | ElementSet::of({e, f});
  report.simple = report.offending.empty();
  return report;
}

namespace {

// Per-element fingerprint preserved by relabeling and reorientation.
std::vector<std::vector<int>> element_invariants(const OrientedMatroid& m) {
  std::vector<std::vector<int>> inv(static_cast<std::size_t>(m.ground_size()));
  for (int e = 0; e < m.ground_size(); ++e) {
    int zero_covectors = 0;
    for (const auto& x : m.covectors()) zero_covectors += x[e] == Sign::Zero;
    inv[e].push_back(zero_covectors);
    std::vector<int> sizes;
    for (const auto& c : m.cocircuits()) {
      if (c[e] == Sign::Zero) sizes.push_back(c.support().size());
    }
    std::sort(sizes.begin(), sizes.end());
    inv[e].insert(inv[e].end(), sizes.begin(), sizes.end());
  }
  return inv;
}

std::multiset<int> support_sizes(const std::vector<SignVector>& vs) {
  std::multiset<int> out;
  for (const auto& v : vs) out.insert(v.support().size());
  return out;
}

}  // namespace

std::optional<IsomorphismWitness> are_isomorphic(const OrientedMatroid& m1, const OrientedMatroid& m2) {
  const int n = m1.ground_size();
  if (n != m2.ground_size()) return std::nullopt;
  if (n > kIsomorphismSearchLimit) {
    throw Error(Errc::SearchBudgetExceeded, "isomorphism search is limited to ground sets of size " +
                                                std::to_string(kIsomorphismSearchLimit));
  }
  if (m1.covectors().size() != m2.covectors().size() || m1.height_profile() != m2.height_profile() ||
      support_sizes(m1.cocircuits()) != support_sizes(m2.cocircuits())) {
    return std::nullopt;
  }
  const auto inv1 = element_invariants(m1);
  const auto inv2 = element_invariants(m2);
  const CovectorSet target(m2.cocircuits().begin(), m2.cocircuits().end());
  const SignVector& tope1 = m1.topes().front();

  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::optional<IsomorphismWitness> found;

  auto try_reorientations = [&]() {
    const SignVector image = relabel(tope1, perm, ElementSet());
    std::vector<ElementSet> candidates{ElementSet()};
    for (const auto& t2 : m2.topes()) {
      const ElementSet r = separation_set(image, t2);
      if (!r.empty()) candidates.push_back(r);
    }
    for (ElementSet r : candidates) {
      const bool ok = std::all_of(m1.cocircuits().begin(), m1.cocircuits().end(),
                                  [&](const SignVector& c) { return target.count(relabel(c, perm, r)) != 0; });
      if (ok) {
        found = IsomorphismWitness{perm, r};
        return true;
      }
    }
    return false;
  };

  auto assign = [&](auto&& self, int e) -> bool {
    if (e == n) return try_reorientations();
    for (int f = 0; f < n; ++f) {
      if (used[f] || inv1[e] != inv2[f]) continue;
      used[f] = true;
      perm[e] = f;
      if (self(self, e + 1)) return true;
      used[f] = false;
    }
    perm[e] = -1;
    return false;
  };
  assign(assign, 0);
  return found;
}

}  // namespace om
