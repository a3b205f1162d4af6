#ifndef MEDIAN_HEURISTICS_HPP
#define MEDIAN_HEURISTICS_HPP

#include "median/graph.hpp"

namespace median {

struct SweepResult {
  Vertex a = 0;
  Vertex b = 0;
  Hops hops = 0;      // d(a, b), a lower bound on the diameter
  Vertex start = 0;   // start of the last 2-sweep
};

/// BFS from start to its farthest vertex a, then BFS from a to its farthest
/// b. Farthest ties go to the smallest id.
SweepResult sweep2(const Graph& g, Vertex start);

/// sweep2, then a second sweep2 from a middle vertex of the (a1, b1) path.
/// The middle is reached by walking ⌊d/2⌋ steps back from b1, each step to
/// the smallest-id neighbor one hop closer to a1.
SweepResult sweep4(const Graph& g, Vertex start);

}  // namespace median

#endif  // MEDIAN_HEURISTICS_HPP
