#include "median/opposites.hpp"

#include <algorithm>
#include <stdexcept>

#include "median/parallel.hpp"

namespace median {

WeightedPofSet weighted_pofs(const CubeIndex& index, Vertex m) {
  WeightedPofSet set;
  weighted_pofs(index, m, set);
  return set;
}

void weighted_pofs(const CubeIndex& index, Vertex m, WeightedPofSet& out) {
  out.owner = m;
  out.entries.clear();
  for (const CubeId id : index.outgoing(m)) out.entries.push_back({index.pof(id), index[id].phi, id});
}

bool heavier(const WeightedPof& a, const WeightedPof& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.pof.size() != b.pof.size()) return a.pof.size() < b.pof.size();
  return std::lexicographical_compare(a.pof.begin(), a.pof.end(), b.pof.begin(), b.pof.end());
}

bool disjoint(PofView a, PofView b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

namespace {

// Smallest class in a ∩ b, if any.
std::optional<ClassId> first_common(PofView a, PofView b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return *i;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::nullopt;
}

}  // namespace

OppositeTree::OppositeTree(const WeightedPofSet& set) { reset(set); }

void OppositeTree::reset(const WeightedPofSet& set) {
  set_ = &set;
  sorted_pofs_.clear();
  ranked_.resize(set.entries.size());
  for (std::size_t i = 0; i < ranked_.size(); ++i) ranked_[i] = i;
  std::sort(ranked_.begin(), ranked_.end(),
            [&](std::size_t a, std::size_t b) { return heavier(set.entries[a], set.entries[b]); });
  live_ = 0;
  new_node(best_disjoint_from({}), 0);
}

std::size_t OppositeTree::new_node(std::size_t entry, std::size_t depth) {
  if (live_ == nodes_.size()) nodes_.emplace_back();
  Node& node = nodes_[live_];
  node.entry = entry;
  node.depth = depth;
  node.removed.clear();
  node.children.clear();
  return live_++;
}

std::size_t OppositeTree::best_disjoint_from(PofView removed) const {
  for (const std::size_t i : ranked_)
    if (disjoint(set_->entries[i].pof, removed)) return i;
  throw std::logic_error("weighted set has no entry disjoint from R (is the empty set missing?)");
}

std::size_t OppositeTree::add_child(std::size_t parent, ClassId cls) {
  const std::size_t child = new_node(0, nodes_[parent].depth + 1);
  Pof& removed = nodes_[child].removed;
  removed = nodes_[parent].removed;
  removed.insert(std::upper_bound(removed.begin(), removed.end(), cls), cls);
  nodes_[child].entry = best_disjoint_from(removed);
  nodes_[parent].children.emplace_back(cls, child);
  return child;
}

std::size_t OppositeTree::find_opposite(PofView ladder) {
  std::size_t a = 0;
  for (;;) {
    const std::size_t entry = nodes_[a].entry;
    const auto branch = first_common(set_->entries[entry].pof, ladder);
    if (!branch) return entry;
    std::size_t next = live_;
    for (const auto& [cls, child] : nodes_[a].children) {
      if (cls == *branch) {
        next = child;
        break;
      }
    }
    if (next == live_) next = add_child(a, *branch);
    a = next;
  }
}

std::size_t OppositeTree::depth() const {
  std::size_t d = 0;
  for (const auto& node : nodes()) d = std::max(d, node.depth);
  return d;
}

bool OppositeTree::contains(PofView pof) const {
  return std::binary_search(sorted_pofs_.begin(), sorted_pofs_.end(), pof,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                            });
}

void OppositeTree::expand_all(std::size_t node) {
  const PofView index = set_->entries[nodes_[node].entry].pof;
  for (const ClassId cls : index) {
    Pof extended = nodes_[node].removed;
    extended.insert(std::upper_bound(extended.begin(), extended.end(), cls), cls);
    if (contains(extended)) add_child(node, cls);
  }
  // add_child may reallocate nodes_; copy the child ids first.
  std::vector<std::size_t> kids;
  for (const auto& [cls, child] : nodes_[node].children) kids.push_back(child);
  for (const std::size_t child : kids) expand_all(child);
}

OppositeTree build_tree(const WeightedPofSet& set) {
  OppositeTree tree(set);
  for (const auto& e : set.entries) tree.sorted_pofs_.emplace_back(e.pof.begin(), e.pof.end());
  std::sort(tree.sorted_pofs_.begin(), tree.sorted_pofs_.end());
  tree.expand_all(0);
  return tree;
}

Upsilon upsilon(OppositeTree& tree) {
  Upsilon best;
  const auto& entries = tree.set().entries;
  bool first = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::size_t op = tree.find_opposite(entries[i].pof);
    const Hops value = entries[i].weight + entries[op].weight;
    if (first || value > best.value) {
      best = {value, i, op};
      first = false;
    }
  }
  return best;
}

void compute_opposites(CubeIndex& index, unsigned threads) {
  parallel_for(index.num_vertices(), threads, [&index](std::size_t m) {
    // Per-thread scratch; reusing it avoids a round of small allocations per vertex.
    thread_local WeightedPofSet set;
    thread_local OppositeTree tree;
    weighted_pofs(index, static_cast<Vertex>(m), set);
    tree.reset(set);
    for (const auto& e : set.entries) index.at(e.cube).opposite = set.entries[tree.find_opposite(e.pof)].cube;
  });
}

DiameterResult diameter_via_upsilon(const CubeIndex& index) {
  DiameterResult best;
  bool first = true;
  for (Vertex m = 0; m < index.num_vertices(); ++m) {
    for (const CubeId id : index.outgoing(m)) {
      const CubeRecord& r = index[id];
      if (r.opposite == kNoCube) throw std::logic_error("opposites not computed");
      const CubeRecord& op = index[r.opposite];
      const Hops value = r.phi + op.phi;
      if (first || value > best.diameter) {
        best = {value, m, id, r.opposite, r.mu, op.mu};
        first = false;
      }
    }
  }
  return best;
}

}  // namespace median
