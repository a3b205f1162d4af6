#include "median/cubes.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace median {

CubeIndex enumerate_cubes(const Graph& g, const ThetaDecomposition& theta) {
  const std::size_t n = g.num_vertices();
  const auto& dist0 = theta.dist0();
  CubeIndex idx;
  idx.ingoing_begin_.assign(n, 0);
  idx.ingoing_count_.assign(n, 0);

  std::size_t total = 0;
  std::size_t pool = 0;  // Σ k 2^(k-1): each class sits in half the subsets
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t k = theta.in_classes(v).size();
    if (k >= 31) throw CubeError("vertex " + std::to_string(v) + " has " + std::to_string(k) + " ingoing classes");
    idx.dimension_ = std::max(idx.dimension_, k);
    total += std::size_t{1} << k;
    if (k) pool += k << (k - 1);
  }
  if (total >= kNoCube) throw CubeError("too many cubes: " + std::to_string(total));
  idx.records_.reserve(total);
  idx.pool_.reserve(pool);

  Pof classes;
  for (const Vertex v : dist0.order) {
    const auto in = theta.in_classes(v);
    const std::uint32_t subsets = 1u << in.size();
    idx.ingoing_begin_[v] = static_cast<CubeId>(idx.records_.size());
    idx.ingoing_count_[v] = subsets;
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      classes.clear();
      for (std::size_t b = 0; b < in.size(); ++b)
        if (mask & (1u << b)) classes.push_back(in[b]);
      Vertex w = v;
      for (const ClassId c : classes) {
        const auto e = theta.incident_edge(w, c);
        const Vertex next = e ? g.other_end(*e, w) : w;
        if (!e || dist0[next] + 1 != dist0[w]) {
          throw CubeError("walk from anti-basis " + std::to_string(v) + " has no ingoing edge of class " +
                          std::to_string(c) + " at vertex " + std::to_string(w));
        }
        w = next;
      }
      CubeRecord r;
      r.basis = w;
      r.anti_basis = v;
      r.pof_begin = static_cast<std::uint32_t>(idx.pool_.size());
      r.pof_size = static_cast<std::uint32_t>(classes.size());
      r.mu = v;
      idx.pool_.insert(idx.pool_.end(), classes.begin(), classes.end());
      idx.records_.push_back(r);
    }
  }

  idx.outgoing_offsets_.assign(n + 1, 0);
  for (const auto& r : idx.records_) ++idx.outgoing_offsets_[r.basis + 1];
  for (std::size_t v = 0; v < n; ++v) idx.outgoing_offsets_[v + 1] += idx.outgoing_offsets_[v];
  idx.outgoing_.resize(idx.records_.size());
  std::vector<std::size_t> fill(idx.outgoing_offsets_.begin(), idx.outgoing_offsets_.end() - 1);
  for (CubeId id = 0; id < idx.records_.size(); ++id) idx.outgoing_[fill[idx.records_[id].basis]++] = id;
  return idx;
}

std::optional<CubeId> find_by_antibasis(const ThetaDecomposition& theta, const CubeIndex& index,
                                        Vertex anti_basis, PofView pof) {
  if (anti_basis >= index.num_vertices()) return std::nullopt;
  const auto in = theta.in_classes(anti_basis);
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < pof.size(); ++i) {
    if (i > 0 && pof[i - 1] >= pof[i]) return std::nullopt;
    const auto it = std::lower_bound(in.begin(), in.end(), pof[i]);
    if (it == in.end() || *it != pof[i]) return std::nullopt;
    mask |= 1u << (it - in.begin());
  }
  return index.ingoing_id(anti_basis, mask);
}

std::optional<CubeId> find_by_basis(const Graph& g, const ThetaDecomposition& theta, const CubeIndex& index,
                                    Vertex basis, PofView pof) {
  if (basis >= index.num_vertices()) return std::nullopt;
  const auto& dist0 = theta.dist0();
  Vertex w = basis;
  for (const ClassId c : pof) {
    const auto e = theta.incident_edge(w, c);
    if (!e) return std::nullopt;
    const Vertex next = g.other_end(*e, w);
    if (dist0[next] != dist0[w] + 1) return std::nullopt;
    w = next;
  }
  const auto id = find_by_antibasis(theta, index, w, pof);
  if (!id || index[*id].basis != basis) return std::nullopt;
  return id;
}

CubeId cube_lookup(const Graph& g, const ThetaDecomposition& theta, const CubeIndex& index, CubeKey key,
                   Vertex v, PofView pof) {
  const auto id = key == CubeKey::basis ? find_by_basis(g, theta, index, v, pof)
                                        : find_by_antibasis(theta, index, v, pof);
  if (!id) {
    throw CubeError(std::string("no cube with ") + (key == CubeKey::basis ? "basis " : "anti-basis ") +
                    std::to_string(v) + " and the given classes");
  }
  return *id;
}

CubeCounts count_cubes(const CubeIndex& index) {
  CubeCounts counts;
  counts.records = index.size();
  std::set<Pof> distinct;
  for (CubeId id = 0; id < index.size(); ++id) {
    const auto p = index.pof(id);
    distinct.emplace(p.begin(), p.end());
  }
  counts.distinct_pofs = distinct.size();
  counts.beta.assign(index.dimension() + 1, 0);
  for (const auto& p : distinct) {
    if (p.size() >= counts.beta.size()) counts.beta.resize(p.size() + 1, 0);
    ++counts.beta[p.size()];
  }
  for (std::size_t i = 0; i < counts.beta.size(); ++i) counts.weighted_beta_sum += counts.beta[i] << i;
  return counts;
}

}  // namespace median
