#include <gtest/gtest.h>

#include <map>

#include "median/generators.hpp"
#include "median/opposites.hpp"
#include "median/oracle.hpp"
#include "median/phi.hpp"
#include "support.hpp"

namespace median {
namespace {

// Owns the class lists a hand-built WeightedPofSet points into.
struct HandSet {
  std::vector<Pof> pofs;
  WeightedPofSet set;

  explicit HandSet(std::vector<std::pair<Pof, Hops>> entries) {
    pofs.reserve(entries.size());
    for (auto& [pof, w] : entries) {
      pofs.push_back(pof);
      set.entries.push_back({pofs.back(), w, kNoCube});
    }
  }
};

Pof as_pof(PofView v) { return Pof(v.begin(), v.end()); }

struct Labeled {
  ThetaDecomposition theta;
  CubeIndex index;
};

Labeled label(const Graph& g, Vertex v0 = 0) {
  Labeled l{compute_theta(g, v0), {}};
  l.index = enumerate_cubes(g, l.theta);
  compute_phi(l.index, l.theta);
  return l;
}

TEST(OppositeTree, SingleOutgoingClass) {
  HandSet h({{{}, 0}, {{4}, 1}});
  OppositeTree tree = build_tree(h.set);
  EXPECT_EQ(as_pof(h.set.entries[tree.root().entry].pof), Pof{4});
  ASSERT_EQ(tree.nodes().size(), 2u);
  EXPECT_EQ(as_pof(h.set.entries[tree.nodes()[1].entry].pof), Pof{});
  EXPECT_EQ(as_pof(find_opposite(tree, Pof{4}).pof), Pof{});
  EXPECT_EQ(as_pof(find_opposite(tree, Pof{}).pof), Pof{4});
}

TEST(OppositeTree, ThreeLevelConfiguration) {
  // i=0 j=1 h=2 r=3 l=4; the family is closed under subsets. {i,h} has to
  // be present for the branch through h below {j,h,r} to exist.
  HandSet h({{{}, 0},      {{0}, 1},     {{1}, 2},     {{2}, 1},     {{3}, 1},     {{4}, 8},      {{0, 1}, 10},
             {{0, 2}, 1},  {{1, 2}, 4},  {{1, 3}, 3},  {{2, 3}, 2},  {{0, 4}, 5},  {{1, 2, 3}, 9}});
  OppositeTree tree = build_tree(h.set);
  const auto& nodes = tree.nodes();
  EXPECT_EQ(as_pof(h.set.entries[tree.root().entry].pof), (Pof{0, 1}));
  // Child of the root through class i.
  std::size_t via_i = nodes.size();
  for (const auto& [cls, child] : tree.root().children)
    if (cls == 0) via_i = child;
  ASSERT_LT(via_i, nodes.size());
  EXPECT_EQ(as_pof(h.set.entries[nodes[via_i].entry].pof), (Pof{1, 2, 3}));
  std::size_t via_h = nodes.size();
  for (const auto& [cls, child] : nodes[via_i].children)
    if (cls == 2) via_h = child;
  ASSERT_LT(via_h, nodes.size());
  EXPECT_EQ(nodes[via_h].removed, (Pof{0, 2}));
  EXPECT_EQ(as_pof(h.set.entries[nodes[via_h].entry].pof), Pof{4});
  EXPECT_EQ(as_pof(find_opposite(tree, Pof{0, 4}).pof), (Pof{1, 2, 3}));
  EXPECT_EQ(as_pof(find_opposite(tree, Pof{}).pof), (Pof{0, 1}));
}

TEST(OppositeTree, StarOfThreeClasses) {
  HandSet h({{{}, 0}, {{0}, 3}, {{1}, 2}, {{2}, 1}});
  OppositeTree tree = build_tree(h.set);
  EXPECT_EQ(as_pof(h.set.entries[tree.root().entry].pof), Pof{0});
  ASSERT_EQ(tree.root().children.size(), 1u);
  EXPECT_EQ(as_pof(h.set.entries[tree.nodes()[tree.root().children[0].second].entry].pof), Pof{1});
  EXPECT_EQ(upsilon(tree).value, 5u);
}

TEST(OppositeTree, TieBreakPrefersSmallerThenLexicographic) {
  HandSet h({{{}, 0}, {{1}, 2}, {{0}, 2}, {{0, 1}, 2}});
  OppositeTree tree(h.set);
  EXPECT_EQ(as_pof(h.set.entries[tree.root().entry].pof), Pof{0});
}

TEST(OppositeTree, MissingEmptySetIsRejected) {
  HandSet h({{{0}, 1}});
  OppositeTree tree(h.set);
  EXPECT_THROW(tree.find_opposite(Pof{0}), std::logic_error);
}

// op(L) against the quadratic scan, eager and lazy trees against each other.
TEST(OppositeProperties, MatchesQuadraticScan) {
  for (const auto& item : testing::median_corpus(120, 300, 5, 41)) {
    const Graph& g = item.graph;
    auto l = label(g);
    const auto sq = square_orthogonality(g, l.theta);
    for (Vertex m = 0; m < g.num_vertices(); ++m) {
      const WeightedPofSet set = weighted_pofs(l.index, m);
      OppositeTree eager = build_tree(set);
      OppositeTree lazy(set);
      for (std::size_t i = 0; i < set.entries.size(); ++i) {
        std::size_t scan = set.entries.size();
        for (std::size_t j = 0; j < set.entries.size(); ++j) {
          if (!disjoint(set.entries[i].pof, set.entries[j].pof)) continue;
          if (scan == set.entries.size() || heavier(set.entries[j], set.entries[scan])) scan = j;
        }
        ASSERT_LT(scan, set.entries.size());
        EXPECT_EQ(eager.find_opposite(set.entries[i].pof), scan) << item.name << " m " << m;
        EXPECT_EQ(lazy.find_opposite(set.entries[i].pof), scan) << item.name << " m " << m;
      }
      // Structural bounds on the full tree.
      // A node at depth k has at most d - k children.
      const std::size_t d = l.index.dimension();
      std::size_t bound = 0;
      std::size_t paths = 1;
      for (std::size_t k = 0; k <= d; ++k) {
        bound += paths;
        paths *= d - k;
      }
      EXPECT_LE(eager.depth(), d) << item.name;
      EXPECT_LE(eager.nodes().size(), bound) << item.name;
      std::map<Pof, std::size_t> eager_by_r;
      for (const auto& node : eager.nodes()) {
        EXPECT_TRUE(sq.is_pof(node.removed)) << item.name;
        EXPECT_TRUE(disjoint(set.entries[node.entry].pof, node.removed)) << item.name;
        eager_by_r[node.removed] = node.entry;
      }
      // Lazily grown nodes carry the same index as the eager node with that R.
      for (const auto& node : lazy.nodes()) {
        ASSERT_TRUE(eager_by_r.count(node.removed)) << item.name;
        EXPECT_EQ(eager_by_r[node.removed], node.entry) << item.name;
      }
    }
  }
}

// Υ(m) is the largest d(u, v) over pairs whose median with v0 is m.
TEST(OppositeProperties, UpsilonIsBestPairThroughMedian) {
  for (const auto& item : testing::median_corpus(60, 90, 5, 42)) {
    const Graph& g = item.graph;
    const Vertex v0 = 0;
    auto l = label(g, v0);
    const DistanceMatrix dm(g);
    const auto n = static_cast<Vertex>(g.num_vertices());
    std::vector<Hops> brute(n, 0);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u; v < n; ++v) {
        const auto m = median_of(dm, u, v, v0);
        ASSERT_TRUE(m.has_value()) << item.name;
        brute[*m] = std::max(brute[*m], dm(u, v));
      }
    }
    for (Vertex m = 0; m < n; ++m) {
      const WeightedPofSet set = weighted_pofs(l.index, m);
      OppositeTree tree(set);
      EXPECT_EQ(upsilon(tree).value, brute[m]) << item.name << " m " << m;
    }
  }
}

TEST(DiameterViaUpsilon, Fixtures) {
  for (unsigned k = 1; k <= 7; ++k) {
    const Graph g = gen_hypercube(k);
    auto l = label(g);
    compute_opposites(l.index);
    const auto d = diameter_via_upsilon(l.index);
    EXPECT_EQ(d.diameter, k);
    EXPECT_EQ(d.a ^ d.b, (Vertex{1} << k) - 1);
  }
  for (const auto& [name, expected] : std::vector<std::pair<std::string, Hops>>{{"gstar", 3}, {"hstar", 6}}) {
    const Graph g = fixture(name);
    auto l = label(g);
    compute_opposites(l.index);
    const auto d = diameter_via_upsilon(l.index);
    EXPECT_EQ(d.diameter, expected) << name;
    EXPECT_EQ(bfs(g, d.a)[d.b], expected) << name;
  }
}

TEST(DiameterViaUpsilon, RequiresOpposites) {
  const Graph g = fixture("gstar");
  auto l = label(g);
  EXPECT_THROW(diameter_via_upsilon(l.index), std::logic_error);
}

TEST(DiameterViaUpsilon, ThreadCountDoesNotChangeResult) {
  const Graph g = cartesian_product(gen_grid(30, 40), gen_tree(3, 1));
  auto a = label(g);
  auto b = label(g);
  compute_opposites(a.index, 1);
  compute_opposites(b.index, 4);
  for (CubeId id = 0; id < a.index.size(); ++id) ASSERT_EQ(a.index[id].opposite, b.index[id].opposite);
  const auto da = diameter_via_upsilon(a.index);
  const auto db = diameter_via_upsilon(b.index);
  EXPECT_EQ(da.diameter, db.diameter);
  EXPECT_EQ(da.a, db.a);
  EXPECT_EQ(da.b, db.b);
  EXPECT_EQ(da.diameter, 29u + 39u + 2u);
}

TEST(DiameterViaUpsilon, MatchesOracleOnCorpus) {
  for (const auto& item : testing::median_corpus(150, 500, 5, 43)) {
    auto l = label(item.graph);
    compute_opposites(l.index);
    const auto d = diameter_via_upsilon(l.index);
    const auto brute = brute_eccentricities(item.graph);
    EXPECT_EQ(d.diameter, brute.diameter) << item.name;
    EXPECT_EQ(bfs(item.graph, d.a)[d.b], d.diameter) << item.name;
  }
}

}  // namespace
}  // namespace median
