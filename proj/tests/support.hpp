#ifndef MEDIAN_TESTS_SUPPORT_HPP
#define MEDIAN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "median/graph.hpp"

namespace median::testing {

struct CorpusGraph {
  std::string name;
  Graph graph;
  std::size_t dimension = 0;
};

/// Reproducible median graphs: trees, grids, hypercubes, products and
/// peripheral expansions, every one with n ≤ max_n and dimension ≤ max_d.
/// The mix is fixed by `count`; the same arguments give the same corpus.
std::vector<CorpusGraph> median_corpus(std::size_t count, std::size_t max_n, std::size_t max_d,
                                       std::uint64_t seed = 2024);

/// Dimension via the cube pass (throws on non-median input).
std::size_t dimension_of(const Graph& g);

/// 3x2 grid with a pendant at each end of the long side: the middle class
/// splits it 4/4 with 3 boundary vertices on each side. Vertex ids:
/// 0=left pendant, 1..3 left column, 4..6 right column, 7=right pendant.
Graph ladder_with_pendants();

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

}  // namespace median::testing

#endif  // MEDIAN_TESTS_SUPPORT_HPP
