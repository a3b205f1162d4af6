#ifndef MEDIAN_GENERATORS_HPP
#define MEDIAN_GENERATORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "median/graph.hpp"

namespace median {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Random recursive tree: vertex i attaches to a uniform vertex below i.
Graph gen_tree(std::size_t n, std::uint64_t seed);

/// p rows by q columns; vertex (r, c) has id r*q + c.
Graph gen_grid(std::size_t p, std::size_t q);

/// Q_k on bit masks; k ≤ 20.
Graph gen_hypercube(unsigned k);

/// Vertex (a, b) gets id a * n2 + b.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/**
 * `steps` rounds of: pick random a, b; take H = I(a, b); append a copy H' of
 * the subgraph induced by H (new ids in increasing order of the originals)
 * and join each h to its copy. Throws GeneratorError when the vertex count
 * would exceed max_vertices.
 */
Graph peripheral_expansion(const Graph& g, std::uint64_t seed, std::size_t steps,
                           std::size_t max_vertices = 1u << 20);

/// gstar, hstar, fig3, milestones, cogwheel, fig2c.
Graph fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace median

#endif  // MEDIAN_GENERATORS_HPP
