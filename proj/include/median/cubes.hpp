#ifndef MEDIAN_CUBES_HPP
#define MEDIAN_CUBES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "median/graph.hpp"
#include "median/theta.hpp"

namespace median {

using CubeId = std::uint32_t;
/// Strictly increasing class ids. Owned and borrowed forms.
using Pof = std::vector<ClassId>;
using PofView = std::span<const ClassId>;

inline constexpr CubeId kNoCube = std::numeric_limits<CubeId>::max();
inline constexpr Hops kUndefinedHops = std::numeric_limits<Hops>::max();

class CubeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One induced hypercube, identified by its basis (closest to v0) and
/// anti-basis (farthest) plus its class set. Labels are filled by the
/// later passes.
struct CubeRecord {
  Vertex basis = 0;
  Vertex anti_basis = 0;
  std::uint32_t pof_begin = 0;
  std::uint32_t pof_size = 0;

  Hops phi = 0;                     // max d(basis, v) over v above basis with ladder set = pof
  Vertex mu = kNoVertex;            // a vertex attaining phi
  Hops psi = kUndefinedHops;        // set for nonempty pofs by compute_psi
  Vertex psi_witness = kNoVertex;
  CubeId opposite = kNoCube;        // op_basis(pof) as a record id
};

/**
 * All induced hypercubes of a median graph.
 *
 * Records are grouped by anti-basis, anti-bases in BFS order from v0, so
 * anti-basis distances never decrease along the list. Inside a group the
 * record for subset mask k of E⁻(v) (bits over the sorted class list) sits
 * at ingoing_begin(v) + k; mask 0 is the 0-dimensional cube {v}.
 */
class CubeIndex {
 public:
  std::size_t size() const noexcept { return records_.size(); }
  const CubeRecord& operator[](CubeId id) const { return records_[id]; }
  CubeRecord& at(CubeId id) { return records_[id]; }
  std::span<const CubeRecord> records() const noexcept { return records_; }

  PofView pof(CubeId id) const {
    const auto& r = records_[id];
    return {pool_.data() + r.pof_begin, r.pof_size};
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t num_vertices() const noexcept { return ingoing_begin_.size(); }

  CubeId ingoing_begin(Vertex v) const { return ingoing_begin_[v]; }
  CubeId ingoing_count(Vertex v) const { return ingoing_count_[v]; }
  CubeId ingoing_id(Vertex v, std::uint32_t mask) const { return ingoing_begin_[v] + mask; }

  /// Records whose basis is v, ascending id; the first is {v} itself.
  std::span<const CubeId> outgoing(Vertex v) const {
    return {outgoing_.data() + outgoing_offsets_[v], outgoing_.data() + outgoing_offsets_[v + 1]};
  }

 private:
  friend CubeIndex enumerate_cubes(const Graph& g, const ThetaDecomposition& theta);

  std::vector<CubeRecord> records_;
  std::vector<ClassId> pool_;
  std::vector<CubeId> ingoing_begin_;
  std::vector<CubeId> ingoing_count_;
  std::vector<std::size_t> outgoing_offsets_;
  std::vector<CubeId> outgoing_;
  std::size_t dimension_ = 0;
};

/// One record per (v, X ⊆ E⁻(v)); the basis is found by walking one ingoing
/// edge per class of X. Throws CubeError when a walk step is missing.
CubeIndex enumerate_cubes(const Graph& g, const ThetaDecomposition& theta);

/// True iff w has an incident edge of class j. Inside the label passes this
/// decides whether a cube's class set extends by j.
inline bool pof_extension_ok(const ThetaDecomposition& theta, Vertex w, ClassId j) {
  return theta.incident_edge(w, j).has_value();
}

std::optional<CubeId> find_by_antibasis(const ThetaDecomposition& theta, const CubeIndex& index,
                                        Vertex anti_basis, PofView pof);
std::optional<CubeId> find_by_basis(const Graph& g, const ThetaDecomposition& theta, const CubeIndex& index,
                                    Vertex basis, PofView pof);

enum class CubeKey { basis, anti_basis };

/// Throwing lookup; CubeError when no record matches.
CubeId cube_lookup(const Graph& g, const ThetaDecomposition& theta, const CubeIndex& index, CubeKey key,
                   Vertex v, PofView pof);

struct CubeCounts {
  std::size_t records = 0;
  std::size_t distinct_pofs = 0;
  std::vector<std::size_t> beta;  // beta[i]: distinct pofs of size i
  std::size_t weighted_beta_sum = 0;  // Σ 2^i beta[i]
};

/// Counts distinct class sets over all records directly, independently of
/// the per-vertex layout.
CubeCounts count_cubes(const CubeIndex& index);

}  // namespace median

#endif  // MEDIAN_CUBES_HPP
