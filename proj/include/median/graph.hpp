#ifndef MEDIAN_GRAPH_HPP
#define MEDIAN_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace median {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Hops = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Raised by load_graph / Graph construction. line() is the 1-based line of
/// the offending input when the graph came from text, 0 otherwise;
/// edge_index() names the offending edge when there is one.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, std::size_t line = 0,
                      std::optional<std::size_t> edge_index = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        reason_(what),
        line_(line),
        edge_index_(edge_index) {}
  std::size_t line() const noexcept { return line_; }
  std::optional<std::size_t> edge_index() const noexcept { return edge_index_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::optional<std::size_t> edge_index_;
};

struct Edge {
  Vertex u;
  Vertex v;
};

struct Neighbor {
  Vertex to;
  EdgeId edge;
};

/**
 * Simple connected undirected graph with dense ids.
 *
 * Edge ids follow construction order. Each adjacency list is sorted by
 * neighbor id. The object is immutable once built, so concurrent readers
 * need no synchronisation.
 */
class Graph {
 public:
  Graph() = default;

  /// Validates: ids in range, no loops, no parallel edges, connected.
  /// Error messages carry the edge index; load_graph maps it to a line.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Edge id joining u and v, if any. O(log deg(u)).
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  Vertex other_end(EdgeId e, Vertex x) const {
    return edges_[e].u == x ? edges_[e].v : edges_[e].u;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Hop distances from one source. order lists vertices by nondecreasing
/// distance, ascending id within a level.
struct DistVector {
  Vertex source = 0;
  std::vector<Hops> dist;
  std::vector<Vertex> order;

  Hops operator[](Vertex v) const { return dist[v]; }
  Hops eccentricity() const { return dist[order.back()]; }
  /// Smallest-id vertex among the farthest ones.
  Vertex farthest() const;
};

DistVector bfs(const Graph& g, Vertex source);

/// Distances only; reuses the caller's buffers. Used by the all-pairs oracle.
void bfs_into(const Graph& g, Vertex source, std::vector<Hops>& dist, std::vector<Vertex>& queue);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<std::uint8_t> parity;  // valid when bipartite
  std::vector<Vertex> odd_cycle;     // closed walk v0..vk (v0 == vk) when not
};

BipartiteResult check_bipartite(const Graph& g);

/// "n m" header, then m "u v" lines. Lines starting with '#' (after
/// optional whitespace) and blank lines are skipped.
Graph load_graph(std::istream& in);
Graph load_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

void save_graph(std::ostream& out, const Graph& g);
void save_graph_file(const std::string& path, const Graph& g);

}  // namespace median

#endif  // MEDIAN_GRAPH_HPP
