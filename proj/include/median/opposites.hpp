#ifndef MEDIAN_OPPOSITES_HPP
#define MEDIAN_OPPOSITES_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "median/cubes.hpp"

namespace median {

struct WeightedPof {
  PofView pof;
  Hops weight = 0;
  CubeId cube = kNoCube;  // kNoCube for hand-built sets
};

/// Outgoing class sets of one vertex with weights ω(L) = φ(m, L). Closed
/// under subsets and contains ∅ (weight 0).
struct WeightedPofSet {
  Vertex owner = 0;
  std::vector<WeightedPof> entries;
};

WeightedPofSet weighted_pofs(const CubeIndex& index, Vertex m);
/// Same, refilling `out` in place.
void weighted_pofs(const CubeIndex& index, Vertex m, WeightedPofSet& out);

/// Preference used by every argmax here: heavier first, then smaller, then
/// lexicographically smaller class list.
bool heavier(const WeightedPof& a, const WeightedPof& b);

bool disjoint(PofView a, PofView b);

/**
 * Tree T_m answering opposite queries: op(L) is the heaviest entry disjoint
 * from L.
 *
 * Each node carries R(a), the classes on its root path, and its index L_a,
 * the heaviest entry disjoint from R(a). A query descends from the root
 * through the smallest class of L_a ∩ L until the intersection is empty.
 * The tree may be built eagerly (build_tree) or grown on demand by queries;
 * both yield the same node contents.
 */
class OppositeTree {
 public:
  struct Node {
    std::size_t entry;  // index into the set's entries
    Pof removed;        // R(a)
    std::size_t depth;
    std::vector<std::pair<ClassId, std::size_t>> children;
  };

  OppositeTree() = default;
  explicit OppositeTree(const WeightedPofSet& set);

  /// Starts over on another set, keeping allocated storage.
  void reset(const WeightedPofSet& set);

  const WeightedPofSet& set() const noexcept { return *set_; }
  std::span<const Node> nodes() const noexcept { return {nodes_.data(), live_}; }
  const Node& root() const { return nodes_.front(); }
  std::size_t depth() const;

  /// Entry index of op(L). Grows the tree when a needed child is missing.
  std::size_t find_opposite(PofView ladder);

 private:
  friend OppositeTree build_tree(const WeightedPofSet& set);

  std::size_t best_disjoint_from(PofView removed) const;
  std::size_t new_node(std::size_t entry, std::size_t depth);
  std::size_t add_child(std::size_t parent, ClassId cls);
  void expand_all(std::size_t node);
  bool contains(PofView pof) const;

  const WeightedPofSet* set_ = nullptr;
  std::vector<std::size_t> ranked_;  // entries sorted by preference
  std::vector<Node> nodes_;          // the first live_ are in use
  std::size_t live_ = 0;
  std::vector<Pof> sorted_pofs_;  // membership test for eager expansion
};

/// Full tree: a child a[E] for every E ∈ L_a with R(a) ∪ {E} in the set.
OppositeTree build_tree(const WeightedPofSet& set);

inline const WeightedPof& find_opposite(OppositeTree& tree, PofView ladder) {
  return tree.set().entries[tree.find_opposite(ladder)];
}

struct Upsilon {
  Hops value = 0;
  std::size_t entry = 0;     // L
  std::size_t opposite = 0;  // op(L)
};

/// max over entries L of ω(L) + ω(op(L)); the first maximiser in entry order.
Upsilon upsilon(OppositeTree& tree);

/// Fills CubeRecord::opposite for every record (op taken at the record's
/// basis). Vertices are independent; `threads` > 1 splits them across workers.
void compute_opposites(CubeIndex& index, unsigned threads = 1);

struct DiameterResult {
  Hops diameter = 0;
  Vertex through = 0;  // m with Υ(m) = diameter
  CubeId ladder = kNoCube;
  CubeId opposite = kNoCube;
  Vertex a = 0;
  Vertex b = 0;
};

/// max over m of Υ(m), from phi and memoized opposites. Ties go to the
/// smallest m, then the first record of m. The pair is (μ(L), μ(op(L))).
DiameterResult diameter_via_upsilon(const CubeIndex& index);

}  // namespace median

#endif  // MEDIAN_OPPOSITES_HPP
