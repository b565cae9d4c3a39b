#include "om/mh_complex.hpp"

#include <algorithm>
#include <unordered_map>

#include "om/error.hpp"

namespace om {

CWPoset::CWPoset(FinitePoset poset, std::vector<int> dims) : poset_(std::move(poset)), dims_(std::move(dims)) {
  const std::size_t n = poset_.size();
  if (dims_.size() != n) throw Error(Errc::InvalidComplex, "dimension list does not match cell count");
  std::vector<std::size_t> position(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (dims_[c] == 0) {
      position[c] = vertices_.size();
      vertices_.push_back(c);
    }
  }
  cell_vertices_.assign(n, {});
  for (std::size_t c = 0; c < n; ++c) {
    const auto& down = poset_.down_set(c);
    for (std::size_t b = down.find_first(); b != FinitePoset::Bitset::npos; b = down.find_next(b)) {
      if (dims_[b] == 0) cell_vertices_[c].push_back(position[b]);
    }
    if (cell_vertices_[c].empty()) throw Error(Errc::InvalidComplex, "cell " + label(c) + " has no vertex");
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (dims_[c] != 1) continue;
    const auto below = poset_.down_set(c).count() - 1;
    if (cell_vertices_[c].size() != 2 || below != 2) {
      throw Error(Errc::InvalidComplex, "1-cell " + label(c) + " must lie over exactly two distinct vertices");
    }
    edges_.push_back({c, cell_vertices_[c][0], cell_vertices_[c][1]});
  }
  std::vector<std::size_t> edge_position(n, n);
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_position[edges_[i].cell] = i;
  cell_edges_.assign(n, {});
  for (std::size_t c = 0; c < n; ++c) {
    const auto& down = poset_.down_set(c);
    for (std::size_t b = down.find_first(); b != FinitePoset::Bitset::npos; b = down.find_next(b)) {
      if (dims_[b] == 1) cell_edges_[c].push_back(edge_position[b]);
    }
  }
}

CWPoset CWPoset::from_salvetti(const SalvettiComplex& sal) {
  std::vector<int> dims;
  for (const auto& c : sal.cells()) dims.push_back(c.dim);
  return CWPoset(sal.poset(), std::move(dims));
}

CWPoset dual_complex(const OrientedMatroid& m) {
  std::vector<int> dims;
  for (std::size_t i = 0; i < m.covectors().size(); ++i) dims.push_back(m.rank() - m.height_at(i));
  return CWPoset(m.face_poset().dual(), std::move(dims));
}

namespace {

DistanceMatrix bfs_all(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  DistanceMatrix d(n);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    queue.assign(1, s);
    d.at(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      for (std::size_t y : adj[x]) {
        if (d(s, y) < 0) {
          d.at(s, y) = d(s, x) + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return d;
}

std::size_t local_index(const std::vector<std::size_t>& verts, std::size_t v) {
  return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
}

struct OmegaCandidates {
  std::vector<std::size_t> nearest;  // vertex positions, sorted
  std::optional<std::size_t> farthest;
};

// Candidates for omega(v, e) within a scope whose distance is `dist`.
template <class Dist>
OmegaCandidates omega_candidates(std::size_t v, const std::vector<std::size_t>& cell_verts, const Dist& dist) {
  OmegaCandidates out;
  int lo = -1;
  int hi = -1;
  for (std::size_t u : cell_verts) {
    const int d = dist(v, u);
    if (lo < 0 || d < lo) lo = d;
    if (d > hi) hi = d;
  }
  for (std::size_t u : cell_verts) {
    if (dist(v, u) == lo) out.nearest.push_back(u);
  }
  for (std::size_t w : cell_verts) {
    if (dist(v, w) != hi) continue;
    const bool additive = std::all_of(cell_verts.begin(), cell_verts.end(),
                                      [&](std::size_t u) { return dist(v, w) == dist(v, u) + dist(u, w); });
    if (additive) {
      out.farthest = w;
      break;
    }
  }
  return out;
}

struct LocalAgreement {
  std::vector<std::size_t> nearest;
  std::size_t farthest;
  std::size_t first_context;
};

struct LocalPass {
  CheckVerdict verdict;
  std::unordered_map<std::uint64_t, LocalAgreement> keys;
};

std::uint64_t key_of(std::size_t v, std::size_t cell) { return (std::uint64_t(v) << 32) | cell; }

LocalPass run_local(const CWPoset& q, const SkeletonDistances& dist) {
  LocalPass pass;
  for (std::size_t ctx = 0; ctx < q.size(); ++ctx) {
    const auto& verts = q.cell_vertices(ctx);
    const auto& local = dist.local[ctx];
    auto d = [&](std::size_t a, std::size_t b) { return local(local_index(verts, a), local_index(verts, b)); };
    const auto& down = q.poset().down_set(ctx);
    for (std::size_t k = down.find_first(); k != FinitePoset::Bitset::npos; k = down.find_next(k)) {
      for (std::size_t v : verts) {
        const OmegaCandidates cand = omega_candidates(v, q.cell_vertices(k), d);
        if (!cand.farthest) {
          if (pass.verdict.pass) {
            pass.verdict = {false, MHWitness{q.vertices()[v], k, ctx, std::nullopt,
                                             "no additive farthest vertex within the closed cell"}};
          }
          continue;
        }
        auto [it, fresh] = pass.keys.try_emplace(key_of(v, k), LocalAgreement{cand.nearest, *cand.farthest, ctx});
        if (fresh) continue;
        LocalAgreement& agree = it->second;
        std::vector<std::size_t> common;
        std::set_intersection(agree.nearest.begin(), agree.nearest.end(), cand.nearest.begin(), cand.nearest.end(),
                              std::back_inserter(common));
        if (pass.verdict.pass && common.empty()) {
          pass.verdict = {false, MHWitness{q.vertices()[v], k, agree.first_context, ctx,
                                           "nearest vertex differs between closed cells"}};
        } else if (pass.verdict.pass && agree.farthest != *cand.farthest) {
          pass.verdict = {false, MHWitness{q.vertices()[v], k, agree.first_context, ctx,
                                           "farthest vertex differs between closed cells"}};
        }
        if (!common.empty()) agree.nearest = std::move(common);
      }
    }
  }
  return pass;
}

}  // namespace

SkeletonDistances skeleton_distances(const CWPoset& q) {
  const std::size_t nv = q.vertices().size();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& e : q.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  SkeletonDistances out;
  out.global = bfs_all(nv, adj);
  for (std::size_t v = 1; v < nv; ++v) {
    if (out.global(0, v) < 0) {
      throw Error(Errc::Disconnected, "vertices " + q.label(q.vertices()[0]) + " and " +
                                          q.label(q.vertices()[v]) + " lie in different components");
    }
  }
  out.local.reserve(q.size());
  for (std::size_t c = 0; c < q.size(); ++c) {
    const auto& verts = q.cell_vertices(c);
    std::vector<std::vector<std::size_t>> local_adj(verts.size());
    for (std::size_t ei : q.cell_edges(c)) {
      const auto& e = q.edges()[ei];
      const std::size_t a = local_index(verts, e.a);
      const std::size_t b = local_index(verts, e.b);
      local_adj[a].push_back(b);
      local_adj[b].push_back(a);
    }
    out.local.push_back(bfs_all(verts.size(), local_adj));
  }
  return out;
}

std::string MHWitness::describe(const CWPoset& q) const {
  std::string out = clause + ": v=" + q.label(vertex) + " e=" + q.label(cell);
  if (context) out += " in " + q.label(*context);
  if (other_context) out += " vs " + q.label(*other_context);
  return out;
}

CheckVerdict qmh_check(const CWPoset& q) {
  const SkeletonDistances dist = skeleton_distances(q);
  auto d = [&](std::size_t a, std::size_t b) { return dist.global(a, b); };
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    for (std::size_t c = 0; c < q.size(); ++c) {
      if (!omega_candidates(v, q.cell_vertices(c), d).farthest) {
        return {false, MHWitness{q.vertices()[v], c, std::nullopt, std::nullopt, "no additive farthest vertex"}};
      }
    }
  }
  return {};
}

CheckVerdict lmh_check(const CWPoset& q) {
  const SkeletonDistances dist = skeleton_distances(q);
  return run_local(q, dist).verdict;
}

MHReport mh_check(const CWPoset& q) {
  const SkeletonDistances dist = skeleton_distances(q);
  MHReport report;
  report.qmh = qmh_check(q);
  LocalPass local = run_local(q, dist);
  report.lmh = local.verdict;

  auto d = [&](std::size_t a, std::size_t b) { return dist.global(a, b); };
  const std::size_t nv = q.vertices().size();
  std::vector<OmegaEntry> omega;
  CheckVerdict agreement;
  for (std::size_t v = 0; v < nv && report.qmh.pass; ++v) {
    for (std::size_t c = 0; c < q.size(); ++c) {
      const OmegaCandidates global = omega_candidates(v, q.cell_vertices(c), d);
      std::vector<std::size_t> nearest = global.nearest;
      const auto it = local.keys.find(key_of(v, c));
      if (it != local.keys.end()) {
        std::vector<std::size_t> common;
        std::set_intersection(nearest.begin(), nearest.end(), it->second.nearest.begin(), it->second.nearest.end(),
                              std::back_inserter(common));
        if (agreement.pass && common.empty()) {
          agreement = {false, MHWitness{q.vertices()[v], c, it->second.first_context, std::nullopt,
                                        "global nearest vertex differs from the local one"}};
        } else if (agreement.pass && it->second.farthest != *global.farthest) {
          agreement = {false, MHWitness{q.vertices()[v], c, it->second.first_context, std::nullopt,
                                        "global farthest vertex differs from the local one"}};
        }
        if (!common.empty()) nearest = std::move(common);
      }
      omega.push_back({q.vertices()[v], c, q.vertices()[nearest.front()], q.vertices()[*global.farthest]});
    }
  }
  if (!report.qmh.pass) {
    report.mh = report.qmh;
  } else if (!report.lmh.pass) {
    report.mh = report.lmh;
  } else {
    report.mh = agreement;
  }
  if (report.mh.pass) report.omega = std::move(omega);

  report.local_distances_agree = true;
  for (std::size_t c = 0; c < q.size() && report.local_distances_agree; ++c) {
    const auto& verts = q.cell_vertices(c);
    for (std::size_t i = 0; i < verts.size() && report.local_distances_agree; ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (dist.local[c](i, j) != dist.global(verts[i], verts[j])) {
          report.local_distances_agree = false;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace om
