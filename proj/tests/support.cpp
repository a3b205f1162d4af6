#include "support.hpp"

#include <random>

#include "median/cubes.hpp"
#include "median/generators.hpp"
#include "median/theta.hpp"

namespace median::testing {

std::size_t dimension_of(const Graph& g) {
  const auto theta = compute_theta(g);
  return enumerate_cubes(g, theta).dimension();
}

std::vector<CorpusGraph> median_corpus(std::size_t count, std::size_t max_n, std::size_t max_d,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::vector<CorpusGraph> out;
  auto offer = [&](std::string name, Graph g) {
    if (out.size() >= count || g.num_vertices() > max_n) return;
    const std::size_t d = dimension_of(g);
    if (d > max_d) return;
    out.push_back({std::move(name), std::move(g), d});
  };

  for (const auto& name : fixture_names()) offer("fixture-" + name, fixture(name));
  for (unsigned k = 1; k <= 5; ++k) offer("cube-" + std::to_string(k), gen_hypercube(k));

  // A quarter each of trees, grids, products and expansions, then expansions
  // until the count is reached.
  const std::size_t share = count / 4;
  for (std::size_t i = 0; i < share; ++i) {
    const std::size_t n = uniform(1, max_n);
    const std::uint64_t s = rng();
    offer("tree-" + std::to_string(n) + "-" + std::to_string(s), gen_tree(n, s));
  }
  for (std::size_t i = 0; i < share; ++i) {
    const std::size_t p = uniform(1, 22);
    const std::size_t q = uniform(1, std::max<std::size_t>(1, std::min<std::size_t>(40, max_n / p)));
    offer("grid-" + std::to_string(p) + "x" + std::to_string(q), gen_grid(p, q));
  }
  for (std::size_t i = 0; i < share; ++i) {
    const std::uint64_t s = rng();
    Graph a = gen_tree(uniform(2, 12), s);
    Graph b;
    switch (i % 4) {
      case 0: b = gen_tree(uniform(2, 30), s + 1); break;
      case 1: b = gen_grid(uniform(1, 4), uniform(2, 5)); break;
      case 2: b = gen_hypercube(static_cast<unsigned>(uniform(1, 3))); break;
      default: b = peripheral_expansion(gen_tree(1, s), s + 2, uniform(2, 8)); break;
    }
    offer("product-" + std::to_string(i), cartesian_product(a, b));
  }
  for (std::size_t attempt = 0; out.size() < count && attempt < 20 * count; ++attempt) {
    const std::uint64_t s = rng();
    const Graph base = attempt % 2 ? gen_tree(uniform(1, 60), s) : gen_tree(1, s);
    try {
      offer("expand-" + std::to_string(attempt), peripheral_expansion(base, s + 1, uniform(1, 40), max_n));
    } catch (const GeneratorError&) {
      // Grew past max_n; draw again.
    }
  }
  return out;
}

Graph ladder_with_pendants() {
  return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}, {6, 7}});
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
  return Graph::from_edges(a + b, edges);
}

}  // namespace median::testing
