#include "median/generators.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace median {

namespace {

// Builds a graph from vertex names (id = position) and name pairs.
Graph named_graph(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::map<std::string, Vertex> id;
  for (Vertex v = 0; v < names.size(); ++v) id[names[v]] = v;
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) edges.push_back({id.at(a), id.at(b)});
  return Graph::from_edges(names.size(), edges);
}

Graph gstar() {
  // Square 0-1-3-2 with a pendant 4 at 3. A 2-sweep from 1 stops at 2.
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
}

Graph hstar() {
  // 3x3 grid P<col><row> with pendants P4 (at P13), P5 (at P11), P6 (at P33).
  // The center gets id 0 so a 4-sweep from it comes back to it.
  return named_graph({"P22", "P12", "P21", "P23", "P32", "P11", "P13", "P31", "P33", "P4", "P5", "P6"},
                     {{"P11", "P21"}, {"P21", "P31"}, {"P12", "P22"}, {"P22", "P32"}, {"P13", "P23"},
                      {"P23", "P33"}, {"P11", "P12"}, {"P12", "P13"}, {"P21", "P22"}, {"P22", "P23"},
                      {"P31", "P32"}, {"P32", "P33"}, {"P13", "P4"}, {"P11", "P5"}, {"P33", "P6"}});
}

Graph fig3() {
  // Edge order makes the classes come out as 0..3 in the drawing's E1..E4.
  return Graph::from_edges(8, {{0, 2}, {2, 5}, {0, 1}, {3, 4}, {1, 3}, {2, 3}, {3, 6}, {5, 6}, {4, 7}, {6, 7}});
}

Graph milestones() {
  return named_graph({"P11", "P12", "P21", "P22", "P23", "P31", "P32", "P33", "P41", "P42", "P51", "P52", "P61",
                      "P62", "P63", "P64"},
                     {{"P11", "P12"}, {"P11", "P21"}, {"P12", "P22"}, {"P21", "P22"}, {"P21", "P31"},
                      {"P22", "P32"}, {"P31", "P32"}, {"P22", "P23"}, {"P23", "P33"}, {"P32", "P33"},
                      {"P31", "P41"}, {"P32", "P42"}, {"P41", "P42"}, {"P41", "P51"}, {"P42", "P52"},
                      {"P51", "P52"}, {"P41", "P61"}, {"P42", "P62"}, {"P51", "P63"}, {"P52", "P64"},
                      {"P61", "P62"}, {"P61", "P63"}, {"P62", "P64"}, {"P63", "P64"}});
}

Graph cogwheel() {
  return named_graph({"P11", "P12", "P21", "P22", "P23", "P31", "P32", "P33", "P41", "P42", "P43"},
                     {{"P11", "P12"}, {"P11", "P21"}, {"P12", "P22"}, {"P21", "P22"}, {"P21", "P31"},
                      {"P22", "P32"}, {"P31", "P32"}, {"P22", "P23"}, {"P23", "P33"}, {"P32", "P33"},
                      {"P22", "P41"}, {"P12", "P43"}, {"P23", "P42"}, {"P41", "P43"}, {"P41", "P42"}});
}

Graph fig2c() {
  return named_graph({"P31", "P32", "P41", "P42", "P51", "P52", "P61", "P62", "P63", "P64", "P72", "P74"},
                     {{"P31", "P32"}, {"P31", "P41"}, {"P32", "P42"}, {"P41", "P42"}, {"P41", "P51"},
                      {"P42", "P52"}, {"P51", "P52"}, {"P41", "P61"}, {"P42", "P62"}, {"P51", "P63"},
                      {"P52", "P64"}, {"P61", "P62"}, {"P61", "P63"}, {"P62", "P64"}, {"P63", "P64"},
                      {"P62", "P72"}, {"P64", "P74"}});
}

}  // namespace

Graph gen_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GeneratorError("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  return Graph::from_edges(n, edges);
}

Graph gen_grid(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw GeneratorError("grid sides must be positive");
  if (p * q >= kNoVertex) throw GeneratorError("grid too large");
  std::vector<Edge> edges;
  edges.reserve(2 * p * q);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      const auto v = static_cast<Vertex>(r * q + c);
      if (c + 1 < q) edges.push_back({v, v + 1});
      if (r + 1 < p) edges.push_back({v, static_cast<Vertex>(v + q)});
    }
  }
  return Graph::from_edges(p * q, edges);
}

Graph gen_hypercube(unsigned k) {
  if (k > 20) throw GeneratorError("hypercube dimension " + std::to_string(k) + " exceeds 20");
  const Vertex n = Vertex{1} << k;
  std::vector<Edge> edges;
  edges.reserve(std::size_t{n} * k / 2);
  for (Vertex v = 0; v < n; ++v)
    for (unsigned b = 0; b < k; ++b)
      if (!(v & (Vertex{1} << b))) edges.push_back({v, v | (Vertex{1} << b)});
  return Graph::from_edges(n, edges);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.num_vertices();
  const std::size_t n2 = g2.num_vertices();
  if (n1 * n2 >= kNoVertex) throw GeneratorError("product too large");
  std::vector<Edge> edges;
  edges.reserve(n1 * g2.num_edges() + n2 * g1.num_edges());
  auto id = [n2](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * n2 + b); };
  for (std::size_t a = 0; a < n1; ++a)
    for (const auto& e : g2.edges()) edges.push_back({id(a, e.u), id(a, e.v)});
  for (const auto& e : g1.edges())
    for (std::size_t b = 0; b < n2; ++b) edges.push_back({id(e.u, b), id(e.v, b)});
  return Graph::from_edges(n1 * n2, edges);
}

Graph peripheral_expansion(const Graph& g, std::uint64_t seed, std::size_t steps, std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  std::size_t n = g.num_vertices();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Graph current = g;
  std::vector<Hops> da;
  std::vector<Hops> db;
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < steps; ++s) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    bfs_into(current, a, da, queue);
    bfs_into(current, b, db, queue);
    std::vector<Vertex> copy(n, kNoVertex);
    std::size_t next = n;
    for (Vertex w = 0; w < n; ++w)
      if (da[w] + db[w] == da[b]) copy[w] = static_cast<Vertex>(next++);
    if (next > max_vertices) {
      throw GeneratorError("expansion would reach " + std::to_string(next) + " vertices, limit is " +
                           std::to_string(max_vertices));
    }
    const std::size_t old_edges = edges.size();
    for (Vertex w = 0; w < n; ++w)
      if (copy[w] != kNoVertex) edges.push_back({w, copy[w]});
    for (std::size_t i = 0; i < old_edges; ++i) {
      const auto [u, v] = edges[i];
      if (copy[u] != kNoVertex && copy[v] != kNoVertex) edges.push_back({copy[u], copy[v]});
    }
    n = next;
    current = Graph::from_edges(n, edges);
  }
  return current;
}

std::vector<std::string> fixture_names() { return {"gstar", "hstar", "fig3", "milestones", "cogwheel", "fig2c"}; }

Graph fixture(std::string_view name) {
  if (name == "gstar") return gstar();
  if (name == "hstar") return hstar();
  if (name == "fig3") return fig3();
  if (name == "milestones") return milestones();
  if (name == "cogwheel") return cogwheel();
  if (name == "fig2c") return fig2c();
  throw GeneratorError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace median
