#include "median/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace median {

namespace {

void require_budget(const Graph& g, std::size_t budget) {
  if (g.num_vertices() > budget) {
    throw BudgetError("graph has " + std::to_string(g.num_vertices()) + " vertices, oracle budget is " +
                      std::to_string(budget));
  }
}

// Counts medians of (x, y, z), scanning only I(x, y).
std::size_t count_medians(const DistanceMatrix& dm, const std::vector<Vertex>& ixy, Vertex x, Vertex y, Vertex z) {
  std::size_t count = 0;
  for (const Vertex w : ixy)
    if (dm.between(y, w, z) && dm.between(z, w, x)) ++count;
  return count;
}

}  // namespace

DistanceMatrix::DistanceMatrix(const Graph& g, std::size_t budget) : n_(g.num_vertices()) {
  require_budget(g, budget);
  d_.resize(n_ * n_);
  std::vector<Hops> row;
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < n_; ++u) {
    bfs_into(g, u, row, queue);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(std::size_t{u} * n_));
  }
}

EccReport brute_eccentricities(const Graph& g, std::size_t budget) {
  require_budget(g, budget);
  const std::size_t n = g.num_vertices();
  EccReport report;
  report.ecc.resize(n);
  report.witness.resize(n);
  std::vector<Hops> row;
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    bfs_into(g, u, row, queue);
    Vertex far = 0;
    for (Vertex v = 1; v < n; ++v)
      if (row[v] > row[far]) far = v;
    report.ecc[u] = row[far];
    report.witness[u] = far;
  }
  summarize(report);
  return report;
}

std::vector<Vertex> interval(const DistanceMatrix& dm, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < dm.size(); ++w)
    if (dm.between(u, w, v)) out.push_back(w);
  return out;
}

std::optional<Vertex> median_of(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex z) {
  std::optional<Vertex> found;
  for (Vertex w = 0; w < dm.size(); ++w) {
    if (dm.between(x, w, y) && dm.between(y, w, z) && dm.between(z, w, x)) {
      if (found) return std::nullopt;
      found = w;
    }
  }
  return found;
}

MedianVerdict is_median(const Graph& g, const MedianCheckOptions& options) {
  const DistanceMatrix dm(g, options.budget);
  const auto n = static_cast<Vertex>(g.num_vertices());
  MedianVerdict verdict;
  auto check = [&](Vertex x, Vertex y, Vertex z, const std::vector<Vertex>& ixy) {
    const std::size_t count = count_medians(dm, ixy, x, y, z);
    if (count == 1) return true;
    verdict.median = false;
    verdict.triple = {x, y, z};
    verdict.medians = count;
    return false;
  };

  if (n <= options.exhaustive_limit) {
    // Triples with repeated vertices always have exactly one median.
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const auto ixy = interval(dm, x, y);
        for (Vertex z = y + 1; z < n; ++z)
          if (!check(x, y, z, ixy)) return verdict;
      }
    }
    return verdict;
  }

  verdict.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const Vertex x = pick(rng);
    const Vertex y = pick(rng);
    const Vertex z = pick(rng);
    if (!check(x, y, z, interval(dm, x, y))) return verdict;
  }
  return verdict;
}

bool is_convex(const DistanceMatrix& dm, const std::vector<Vertex>& subset) {
  std::vector<std::uint8_t> in(dm.size(), 0);
  for (const Vertex v : subset) in[v] = 1;
  for (const Vertex a : subset)
    for (const Vertex b : subset)
      for (Vertex w = 0; w < dm.size(); ++w)
        if (!in[w] && dm.between(a, w, b)) return false;
  return true;
}

bool is_gated(const DistanceMatrix& dm, const std::vector<Vertex>& subset) {
  if (subset.empty()) return false;
  for (Vertex x = 0; x < dm.size(); ++x) {
    // A gate, if any, is the unique nearest member.
    Vertex gate = subset.front();
    for (const Vertex w : subset)
      if (dm(x, w) < dm(x, gate)) gate = w;
    for (const Vertex y : subset)
      if (!dm.between(x, gate, y)) return false;
  }
  return true;
}

Pof signature(const Graph& g, const ThetaDecomposition& theta, const DistanceMatrix& dm, Vertex u, Vertex v) {
  Pof sigma;
  for (ClassId c = 0; c < theta.num_classes(); ++c) {
    const EdgeId rep = theta.class_edges(c).front();
    const Vertex h = theta.head(g, rep);
    const Vertex t = theta.tail(g, rep);
    const bool su = dm(u, h) < dm(u, t);
    const bool sv = dm(v, h) < dm(v, t);
    if (su != sv) sigma.push_back(c);
  }
  return sigma;
}

Pof ladder_set_oracle(const Graph& g, const ThetaDecomposition& theta, const DistanceMatrix& dm, Vertex u,
                      Vertex v) {
  if (!dm.between(theta.v0(), u, v)) {
    throw std::invalid_argument("vertex " + std::to_string(u) + " is not on a shortest path from v0 to " +
                                std::to_string(v));
  }
  Pof ladder;
  for (const ClassId c : signature(g, theta, dm, u, v))
    if (theta.incident_edge(u, c)) ladder.push_back(c);
  return ladder;
}

std::vector<Vertex> milestones_oracle(const Graph& g, const ThetaDecomposition& theta, const CubeIndex& index,
                                      const DistanceMatrix& dm, Vertex u, Vertex v) {
  std::vector<Vertex> path{u};
  while (u != v) {
    if (path.size() > g.num_vertices()) throw std::logic_error("milestone walk does not terminate");
    const Pof ladder = ladder_set_oracle(g, theta, dm, u, v);
    if (ladder.empty()) throw std::logic_error("empty ladder set between distinct vertices");
    u = index[cube_lookup(g, theta, index, CubeKey::basis, u, ladder)].anti_basis;
    path.push_back(u);
  }
  return path;
}

std::vector<ClassId> djokovic_classes(const Graph& g, const DistanceMatrix& dm) {
  constexpr auto kNone = static_cast<ClassId>(-1);
  const std::size_t m = g.num_edges();
  std::vector<ClassId> label(m, kNone);
  ClassId q = 0;
  for (EdgeId e = 0; e < m; ++e) {
    if (label[e] != kNone) continue;
    label[e] = q;
    const auto [x, y] = g.edge(e);
    for (EdgeId f = e + 1; f < m; ++f) {
      if (label[f] != kNone) continue;
      const auto [u, v] = g.edge(f);
      if (dm(x, u) + dm(y, v) != dm(x, v) + dm(y, u)) label[f] = q;
    }
    ++q;
  }
  return label;
}

}  // namespace median
