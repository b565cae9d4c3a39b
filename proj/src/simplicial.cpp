#include "om/simplicial.hpp"

#include <algorithm>

#include "om/error.hpp"

namespace om {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& facets,
                                     std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  facets_.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) throw Error(Errc::InvalidComplex, "empty facet");
    Simplex s(f.begin(), f.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Errc::InvalidComplex, "facet with repeated vertex");
    }
    if (s.back() >= vertex_count_) throw Error(Errc::InvalidComplex, "facet vertex out of range");
    facets_.push_back(std::move(s));
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

const std::vector<std::vector<Simplex>>& SimplicialComplex::faces() const {
  if (faces_ready_) return faces_;
  faces_.assign(static_cast<std::size_t>(dimension() + 1), {});
  for (const auto& f : facets_) {
    const std::uint32_t subsets = 1u << f.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if ((mask >> i) & 1u) s.push_back(f[i]);
      }
      faces_[s.size() - 1].push_back(std::move(s));
    }
  }
  for (auto& group : faces_) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
  faces_ready_ = true;
  return faces_;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& group : faces()) f.push_back(group.size());
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  long sign = 1;
  for (std::size_t count : f_vector()) {
    chi += sign * static_cast<long>(count);
    sign = -sign;
  }
  return chi;
}

bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.vertex_count_ == b.vertex_count_ && a.faces() == b.faces();
}

void IntegerChainComplex::check_boundary_squared() const {
  for (std::size_t k = 2; k < boundary.size(); ++k) {
    if (!(boundary[k - 1] * boundary[k]).is_zero()) {
      throw Error(Errc::ConsistencyFailure, "boundary squared is nonzero in degree " + std::to_string(k));
    }
  }
}

IntegerChainComplex chain_complex(const SimplicialComplex& complex) {
  const auto& faces = complex.faces();
  IntegerChainComplex cc;
  for (const auto& group : faces) cc.dims.push_back(group.size());
  cc.boundary.reserve(faces.size());
  if (!faces.empty()) cc.boundary.emplace_back(0, faces[0].size());
  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& lower = faces[k - 1];
    SparseIntMatrix d(lower.size(), faces[k].size());
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      const Simplex& s = faces[k][j];
      SparseIntMatrix::Column col;
      col.reserve(s.size());
      Simplex facet(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::copy(s.begin(), s.begin() + static_cast<long>(i), facet.begin());
        std::copy(s.begin() + static_cast<long>(i) + 1, s.end(), facet.begin() + static_cast<long>(i));
        const auto row = std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin();
        col.emplace_back(static_cast<std::uint32_t>(row), BigInt(i % 2 == 0 ? 1 : -1));
      }
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      d.set_column(j, std::move(col));
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

std::vector<HomologyGroup> homology(const IntegerChainComplex& complex) {
  const std::size_t top = complex.dims.size();
  std::vector<SmithForm> forms(top);
  for (std::size_t k = 1; k < top; ++k) forms[k] = smith_normal_form(complex.boundary[k]);
  std::vector<HomologyGroup> out(top);
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t rank_out = k == 0 ? 0 : forms[k].rank;
    const std::size_t rank_in = k + 1 < top ? forms[k + 1].rank : 0;
    out[k].betti = complex.dims[k] - rank_out - rank_in;
    if (k + 1 < top) {
      for (const auto& d : forms[k + 1].invariant_factors) {
        if (d > 1) out[k].torsion.push_back(d);
      }
    }
  }
  return out;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& complex) {
  const IntegerChainComplex cc = chain_complex(complex);
  cc.check_boundary_squared();
  return homology(cc);
}

std::vector<std::size_t> betti_numbers(const std::vector<HomologyGroup>& groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

}  // namespace om
