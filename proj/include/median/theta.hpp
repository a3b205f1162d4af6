#ifndef MEDIAN_THETA_HPP
#define MEDIAN_THETA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "median/graph.hpp"

namespace median {

using ClassId = std::uint32_t;

/// Signals that the input cannot be a median graph (a Θ-class that is not a
/// matching, an edge inside one BFS level, ...). The message names the check.
class ThetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassEdge {
  ClassId cls;
  EdgeId edge;
};

/**
 * Θ-classes of a median graph together with the orientation induced by a
 * basepoint v0: an edge points away from v0. For every vertex the incident
 * edges are indexed by class, and split into ingoing (E⁻(v)) and outgoing
 * (E⁺(v)) class lists, both sorted.
 */
class ThetaDecomposition {
 public:
  Vertex v0() const noexcept { return dist0_.source; }
  const DistVector& dist0() const noexcept { return dist0_; }
  std::size_t num_classes() const noexcept { return class_offsets_.size() - 1; }

  ClassId edge_class(EdgeId e) const { return edge_class_[e]; }
  std::span<const ClassId> edge_classes() const noexcept { return edge_class_; }

  std::span<const EdgeId> class_edges(ClassId c) const {
    return {class_edges_.data() + class_offsets_[c], class_edges_.data() + class_offsets_[c + 1]};
  }

  /// Incident (class, edge) pairs of v, sorted by class.
  std::span<const ClassEdge> incident(Vertex v) const {
    return {incident_.data() + vertex_offsets_[v], incident_.data() + vertex_offsets_[v + 1]};
  }
  std::optional<EdgeId> incident_edge(Vertex v, ClassId c) const;

  std::span<const ClassId> in_classes(Vertex v) const {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  std::span<const ClassId> out_classes(Vertex v) const {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }

  /// Endpoint of e farther from v0.
  Vertex head(const Graph& g, EdgeId e) const {
    const auto [u, v] = g.edge(e);
    return dist0_[u] < dist0_[v] ? v : u;
  }
  Vertex tail(const Graph& g, EdgeId e) const { return g.other_end(e, head(g, e)); }

 private:
  friend ThetaDecomposition compute_theta(const Graph& g, Vertex v0);

  DistVector dist0_;
  std::vector<ClassId> edge_class_;
  std::vector<std::size_t> class_offsets_{0};
  std::vector<EdgeId> class_edges_;
  std::vector<std::size_t> vertex_offsets_;
  std::vector<ClassEdge> incident_;
  std::vector<std::size_t> in_offsets_;
  std::vector<ClassId> in_;
  std::vector<std::size_t> out_offsets_;
  std::vector<ClassId> out_;
};

/// Θ-classes as the transitive closure of "opposite in a 4-cycle", found by
/// square enumeration plus union-find. Classes are numbered by their first
/// edge id. Throws ThetaError on non-bipartite input or non-matching classes.
ThetaDecomposition compute_theta(const Graph& g, Vertex v0 = 0);

/// One Θ-class's split. far_side[x] is true when x lies in H″, the
/// halfspace not containing v0.
struct HalfspaceSides {
  ClassId cls = 0;
  std::vector<std::uint8_t> far_side;

  std::size_t far_count() const;
  std::size_t near_count() const { return far_side.size() - far_count(); }
};

/// Two BFS from the endpoints of a representative edge; x goes to the side of
/// the endpoint it is strictly closer to. Throws ThetaError on a tie.
HalfspaceSides halfspace_sides(const Graph& g, const ThetaDecomposition& theta, ClassId c);

/// Boundary vertices of a class: near (∂H′) and far (∂H″) endpoints of its edges.
struct ClassBoundary {
  std::vector<Vertex> near;
  std::vector<Vertex> far;
};
ClassBoundary class_boundary(const Graph& g, const ThetaDecomposition& theta, ClassId c);

/// Symmetric set of class pairs that share a square.
class OrthogonalPairs {
 public:
  void insert(ClassId i, ClassId j) { pairs_.insert(key(i, j)); }
  bool contains(ClassId i, ClassId j) const { return i != j && pairs_.count(key(i, j)) != 0; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /// Every pair of the set is orthogonal (the empty set and singletons qualify).
  bool is_pof(std::span<const ClassId> classes) const;

 private:
  static std::uint64_t key(ClassId i, ClassId j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }
  std::unordered_set<std::uint64_t> pairs_;
};

OrthogonalPairs square_orthogonality(const Graph& g, const ThetaDecomposition& theta);

inline bool orthogonal(const OrthogonalPairs& squares, ClassId i, ClassId j) {
  return squares.contains(i, j);
}

/// Number of 4-cycles, each counted once.
std::size_t count_squares(const Graph& g);

}  // namespace median

#endif  // MEDIAN_THETA_HPP
