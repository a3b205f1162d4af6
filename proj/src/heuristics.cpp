#include "median/heuristics.hpp"

#include <stdexcept>
#include <string>

namespace median {

SweepResult sweep2(const Graph& g, Vertex start) {
  if (start >= g.num_vertices()) throw std::out_of_range("start vertex " + std::to_string(start) + " out of range");
  const Vertex a = bfs(g, start).farthest();
  const DistVector from_a = bfs(g, a);
  const Vertex b = from_a.farthest();
  return {a, b, from_a[b], start};
}

SweepResult sweep4(const Graph& g, Vertex start) {
  const SweepResult first = sweep2(g, start);
  const DistVector from_a = bfs(g, first.a);
  Vertex mid = first.b;
  for (Hops step = 0; step < first.hops / 2; ++step) {
    // Neighbors are sorted by id, so the first match is the smallest.
    for (const auto& nb : g.neighbors(mid)) {
      if (from_a[nb.to] + 1 == from_a[mid]) {
        mid = nb.to;
        break;
      }
    }
  }
  return sweep2(g, mid);
}

}  // namespace median
