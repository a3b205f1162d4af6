#include "median/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace median {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw GraphError("graph has no vertices");
  if (edges.size() > 0xFFFFFFFEu) throw GraphError("too many edges");
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= n || v >= n) {
      throw GraphError("vertex id out of range (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") with n=" + std::to_string(n),
                       0, e);
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u), 0, e);
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    g.adjacency_[fill[u]++] = {v, static_cast<EdgeId>(e)};
    g.adjacency_[fill[v]++] = {u, static_cast<EdgeId>(e)};
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[x]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[x + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.to != b.to ? a.to < b.to : a.edge < b.edge;
    });
    for (auto it = first; it != last && it + 1 != last; ++it) {
      if (it->to == (it + 1)->to) {
        throw GraphError("duplicate edge " + std::to_string(x) + " " + std::to_string(it->to), 0,
                         (it + 1)->edge);
      }
    }
  }
  g.edges_ = std::move(edges);

  std::vector<Hops> dist;
  std::vector<Vertex> queue;
  bfs_into(g, 0, dist, queue);
  if (queue.size() != n) {
    const auto missing = std::find(dist.begin(), dist.end(), static_cast<Hops>(-1)) - dist.begin();
    throw GraphError("graph is disconnected (vertex " + std::to_string(missing) + " unreachable from 0)");
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  const auto adj = neighbors(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v,
                                   [](const Neighbor& a, Vertex x) { return a.to < x; });
  if (it != adj.end() && it->to == v) return it->edge;
  return std::nullopt;
}

Vertex DistVector::farthest() const {
  const Hops far = eccentricity();
  Vertex best = kNoVertex;
  for (auto it = order.rbegin(); it != order.rend() && dist[*it] == far; ++it) best = std::min(best, *it);
  return best;
}

void bfs_into(const Graph& g, Vertex source, std::vector<Hops>& dist, std::vector<Vertex>& queue) {
  const std::size_t n = g.num_vertices();
  dist.assign(n, static_cast<Hops>(-1));
  queue.clear();
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const Hops next = dist[x] + 1;
    for (const auto& nb : g.neighbors(x)) {
      if (dist[nb.to] == static_cast<Hops>(-1)) {
        dist[nb.to] = next;
        queue.push_back(nb.to);
      }
    }
  }
}

DistVector bfs(const Graph& g, Vertex source) {
  DistVector out;
  out.source = source;
  std::vector<Vertex> queue;
  bfs_into(g, source, out.dist, queue);

  // Counting sort by level; ids ascend within a level.
  const Hops levels = queue.empty() ? 0 : out.dist[queue.back()] + 1;
  std::vector<std::size_t> start(levels + 1, 0);
  for (Vertex v = 0; v < out.dist.size(); ++v) ++start[out.dist[v] + 1];
  for (Hops l = 0; l < levels; ++l) start[l + 1] += start[l];
  out.order.resize(out.dist.size());
  for (Vertex v = 0; v < out.dist.size(); ++v) out.order[start[out.dist[v]]++] = v;
  return out;
}

BipartiteResult check_bipartite(const Graph& g) {
  BipartiteResult res;
  const std::size_t n = g.num_vertices();
  std::vector<Hops> dist;
  std::vector<Vertex> queue;
  bfs_into(g, 0, dist, queue);
  for (const auto& e : g.edges()) {
    if (dist[e.u] != dist[e.v]) continue;
    // Two equal-level endpoints: climb both BFS branches to their meeting point.
    std::vector<Vertex> left{e.u};
    std::vector<Vertex> right{e.v};
    auto parent = [&](Vertex x) {
      for (const auto& nb : g.neighbors(x))
        if (dist[nb.to] + 1 == dist[x]) return nb.to;
      return x;
    };
    while (left.back() != right.back()) {
      left.push_back(parent(left.back()));
      right.push_back(parent(right.back()));
    }
    res.odd_cycle = left;
    for (auto it = right.rbegin() + 1; it != right.rend(); ++it) res.odd_cycle.push_back(*it);
    res.odd_cycle.push_back(e.u);
    return res;
  }
  res.bipartite = true;
  res.parity.resize(n);
  for (Vertex v = 0; v < n; ++v) res.parity[v] = static_cast<std::uint8_t>(dist[v] & 1u);
  return res;
}

namespace {

bool skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t header_line = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  auto parse_pair = [&](const std::string& text, unsigned long long& a, unsigned long long& b) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw GraphError("malformed line '" + text + "'", lineno);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    unsigned long long a = 0;
    unsigned long long b = 0;
    if (line.find('-') != std::string::npos) throw GraphError("negative number in '" + line + "'", lineno);
    parse_pair(line, a, b);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      header_line = lineno;
      if (n > 0xFFFFFFFEull) throw GraphError("vertex count too large", lineno);
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) throw GraphError("more edge lines than the header's m=" + std::to_string(m), lineno);
    if (a >= n || b >= n) {
      throw GraphError("vertex id out of range (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") with n=" + std::to_string(n),
                       lineno);
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    edge_lines.push_back(lineno);
  }
  if (!have_header) throw GraphError("missing 'n m' header", lineno);
  if (edges.size() != m) {
    throw GraphError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     header_line);
  }
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const GraphError& err) {
    if (const auto k = err.edge_index()) throw GraphError(err.reason(), edge_lines.at(*k), k);
    throw GraphError(err.reason(), header_line);
  }
}

Graph load_graph_text(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return load_graph(in);
}

void save_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write '" + path + "'");
  save_graph(out, g);
}

}  // namespace median
