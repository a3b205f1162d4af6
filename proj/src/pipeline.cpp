#include "median/pipeline.hpp"

#include <chrono>
#include <string>
#include <utility>

#include "median/phi.hpp"

namespace median {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point& mark) {
  const auto now = Clock::now();
  const double s = std::chrono::duration<double>(now - mark).count();
  mark = now;
  return s;
}

// Copy of g with vertex v renamed labels[v], labels being BFS positions.
Graph relabeled(const Graph& g, Vertex v0, std::vector<Vertex>& labels) {
  if (v0 >= g.num_vertices()) throw ThetaError("basepoint " + std::to_string(v0) + " out of range");
  const auto d = bfs(g, v0);
  labels.assign(g.num_vertices(), 0);
  for (std::size_t i = 0; i < d.order.size(); ++i) labels[d.order[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back({labels[e.u], labels[e.v]});
  return Graph::from_edges(g.num_vertices(), std::move(edges));
}

}  // namespace

Analysis analyze(const Graph& g, const PipelineOptions& options) {
  Analysis a;
  auto mark = Clock::now();
  const auto start = mark;
  Graph internal;
  Vertex v0 = options.v0;
  if (options.bfs_relabel) {
    internal = relabeled(g, options.v0, a.labels);
    v0 = 0;
  }
  const Graph& h = options.bfs_relabel ? internal : g;
  a.times.relabel = seconds_since(mark);
  a.theta = compute_theta(h, v0);
  a.times.theta = seconds_since(mark);
  a.cubes = enumerate_cubes(h, a.theta);
  a.times.cubes = seconds_since(mark);
  compute_phi(a.cubes, a.theta);
  a.times.phi = seconds_since(mark);
  compute_opposites(a.cubes, options.threads);
  a.upsilon = diameter_via_upsilon(a.cubes);
  a.times.opposites = seconds_since(mark);
  compute_psi(a.cubes, a.theta);
  a.report = eccentricities(a.cubes, options.threads);
  if (options.bfs_relabel) {
    // Back to input ids. Witnesses keep their vertex, only the names change.
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> original(n);
    for (Vertex v = 0; v < n; ++v) original[a.labels[v]] = v;
    EccReport mapped;
    mapped.ecc.resize(n);
    mapped.witness.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      mapped.ecc[v] = a.report.ecc[a.labels[v]];
      mapped.witness[v] = original[a.report.witness[a.labels[v]]];
    }
    summarize(mapped);
    a.report = std::move(mapped);
    a.upsilon.through = original[a.upsilon.through];
    a.upsilon.a = original[a.upsilon.a];
    a.upsilon.b = original[a.upsilon.b];
  }
  a.times.psi = seconds_since(mark);
  a.times.total = std::chrono::duration<double>(mark - start).count();
  return a;
}

}  // namespace median
