#include "median/theta.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace median {

namespace {

// Calls f(ab, xy, ax, by) for every square a-b-y-x, once per (edge ab, square)
// pair. ab/xy and ax/by are the two pairs of opposite edges.
template <typename F>
void for_each_square(const Graph& g, F&& f) {
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> stamp(n, static_cast<EdgeId>(-1));
  std::vector<EdgeId> via(n, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Vertex a = g.edge(e).u;
    Vertex b = g.edge(e).v;
    if (g.degree(a) > g.degree(b)) std::swap(a, b);
    for (const auto& nb : g.neighbors(b)) {
      stamp[nb.to] = e;
      via[nb.to] = nb.edge;
    }
    for (const auto& ax : g.neighbors(a)) {
      if (ax.to == b) continue;
      for (const auto& xy : g.neighbors(ax.to)) {
        if (xy.to != a && xy.to != b && stamp[xy.to] == e) f(e, xy.edge, ax.edge, via[xy.to]);
      }
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

ThetaDecomposition compute_theta(const Graph& g, Vertex v0) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (v0 >= n) throw ThetaError("basepoint " + std::to_string(v0) + " out of range");

  ThetaDecomposition t;
  t.dist0_ = bfs(g, v0);
  for (const auto& e : g.edges()) {
    if (t.dist0_[e.u] == t.dist0_[e.v]) {
      throw ThetaError("not bipartite: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " joins two vertices at distance " + std::to_string(t.dist0_[e.u]) + " from v0");
    }
  }

  UnionFind uf(m);
  for_each_square(g, [&](EdgeId ab, EdgeId xy, EdgeId, EdgeId) { uf.unite(ab, xy); });

  // Number classes by first edge.
  std::vector<ClassId> root_class(m, static_cast<ClassId>(-1));
  t.edge_class_.resize(m);
  ClassId q = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const auto r = uf.find(e);
    if (root_class[r] == static_cast<ClassId>(-1)) root_class[r] = q++;
    t.edge_class_[e] = root_class[r];
  }

  t.class_offsets_.assign(q + 1, 0);
  for (EdgeId e = 0; e < m; ++e) ++t.class_offsets_[t.edge_class_[e] + 1];
  for (ClassId c = 0; c < q; ++c) t.class_offsets_[c + 1] += t.class_offsets_[c];
  t.class_edges_.resize(m);
  {
    std::vector<std::size_t> fill(t.class_offsets_.begin(), t.class_offsets_.end() - 1);
    for (EdgeId e = 0; e < m; ++e) t.class_edges_[fill[t.edge_class_[e]]++] = e;
  }

  t.vertex_offsets_.assign(n + 1, 0);
  t.in_offsets_.assign(n + 1, 0);
  t.out_offsets_.assign(n + 1, 0);
  t.incident_.reserve(2 * m);
  t.in_.reserve(m);
  t.out_.reserve(m);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t first = t.incident_.size();
    for (const auto& nb : g.neighbors(v)) t.incident_.push_back({t.edge_class_[nb.edge], nb.edge});
    std::sort(t.incident_.begin() + static_cast<std::ptrdiff_t>(first), t.incident_.end(),
              [](const ClassEdge& a, const ClassEdge& b) { return a.cls < b.cls; });
    for (std::size_t i = first; i + 1 < t.incident_.size(); ++i) {
      if (t.incident_[i].cls == t.incident_[i + 1].cls) {
        throw ThetaError("class " + std::to_string(t.incident_[i].cls) + " is not a matching: two of its edges meet at vertex " +
                         std::to_string(v));
      }
    }
    t.vertex_offsets_[v + 1] = t.incident_.size();
    for (std::size_t i = first; i < t.incident_.size(); ++i) {
      const Vertex other = g.other_end(t.incident_[i].edge, v);
      if (t.dist0_[other] < t.dist0_[v]) {
        t.in_.push_back(t.incident_[i].cls);
      } else {
        t.out_.push_back(t.incident_[i].cls);
      }
    }
    t.in_offsets_[v + 1] = t.in_.size();
    t.out_offsets_[v + 1] = t.out_.size();
  }
  return t;
}

std::optional<EdgeId> ThetaDecomposition::incident_edge(Vertex v, ClassId c) const {
  const auto inc = incident(v);
  const auto it = std::lower_bound(inc.begin(), inc.end(), c,
                                   [](const ClassEdge& a, ClassId x) { return a.cls < x; });
  if (it != inc.end() && it->cls == c) return it->edge;
  return std::nullopt;
}

std::size_t HalfspaceSides::far_count() const {
  return static_cast<std::size_t>(std::count(far_side.begin(), far_side.end(), std::uint8_t{1}));
}

HalfspaceSides halfspace_sides(const Graph& g, const ThetaDecomposition& theta, ClassId c) {
  if (c >= theta.num_classes()) throw ThetaError("class id " + std::to_string(c) + " out of range");
  const EdgeId rep = theta.class_edges(c).front();
  const Vertex near = theta.tail(g, rep);
  const Vertex far = theta.head(g, rep);
  std::vector<Hops> dn;
  std::vector<Hops> df;
  std::vector<Vertex> queue;
  bfs_into(g, near, dn, queue);
  bfs_into(g, far, df, queue);
  HalfspaceSides sides;
  sides.cls = c;
  sides.far_side.resize(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (dn[x] == df[x]) {
      throw ThetaError("vertex " + std::to_string(x) + " is equidistant from both ends of class " +
                       std::to_string(c));
    }
    sides.far_side[x] = df[x] < dn[x] ? 1 : 0;
  }
  return sides;
}

ClassBoundary class_boundary(const Graph& g, const ThetaDecomposition& theta, ClassId c) {
  ClassBoundary b;
  for (const EdgeId e : theta.class_edges(c)) {
    b.near.push_back(theta.tail(g, e));
    b.far.push_back(theta.head(g, e));
  }
  return b;
}

bool OrthogonalPairs::is_pof(std::span<const ClassId> classes) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!contains(classes[i], classes[j])) return false;
  return true;
}

OrthogonalPairs square_orthogonality(const Graph& g, const ThetaDecomposition& theta) {
  OrthogonalPairs pairs;
  for_each_square(g, [&](EdgeId ab, EdgeId, EdgeId ax, EdgeId) {
    pairs.insert(theta.edge_class(ab), theta.edge_class(ax));
  });
  return pairs;
}

std::size_t count_squares(const Graph& g) {
  std::size_t hits = 0;
  for_each_square(g, [&](EdgeId, EdgeId, EdgeId, EdgeId) { ++hits; });
  return hits / 4;
}

}  // namespace median
