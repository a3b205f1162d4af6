#ifndef MEDIAN_ORACLE_HPP
#define MEDIAN_ORACLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "median/cubes.hpp"
#include "median/eccentricity.hpp"
#include "median/graph.hpp"
#include "median/theta.hpp"

// Brute-force references. Everything here is quadratic or worse and meant
// for small graphs: tests, the `check` command, cross-validation.
namespace median {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 5000;

/// All-pairs hop distances, one BFS per row.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g, std::size_t budget = kDefaultBudget);

  std::size_t size() const noexcept { return n_; }
  Hops operator()(Vertex u, Vertex v) const { return d_[std::size_t{u} * n_ + v]; }
  /// w ∈ I(u, v)
  bool between(Vertex u, Vertex w, Vertex v) const { return (*this)(u, w) + (*this)(w, v) == (*this)(u, v); }

 private:
  std::size_t n_;
  std::vector<Hops> d_;
};

/// n BFS runs; throws BudgetError when n exceeds the budget.
EccReport brute_eccentricities(const Graph& g, std::size_t budget = kDefaultBudget);

std::vector<Vertex> interval(const DistanceMatrix& dm, Vertex u, Vertex v);

/// The unique vertex of I(x,y) ∩ I(y,z) ∩ I(z,x), or nullopt when there are
/// zero or several.
std::optional<Vertex> median_of(const DistanceMatrix& dm, Vertex x, Vertex y, Vertex z);

struct MedianVerdict {
  bool median = true;
  bool exhaustive = true;
  std::array<Vertex, 3> triple{0, 0, 0};  // a violating triple when !median
  std::size_t medians = 1;                // how many medians that triple has
};

struct MedianCheckOptions {
  std::size_t exhaustive_limit = 128;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultBudget;
};

/// Every triple has exactly one median. All triples when n is within the
/// exhaustive limit, seeded random triples otherwise.
MedianVerdict is_median(const Graph& g, const MedianCheckOptions& options = {});

/// I(a, b) ⊆ subset for all a, b in subset.
bool is_convex(const DistanceMatrix& dm, const std::vector<Vertex>& subset);
/// Every vertex has a gate in subset: a vertex of subset lying on a shortest
/// path to each member.
bool is_gated(const DistanceMatrix& dm, const std::vector<Vertex>& subset);

/// σ(u, v): classes separating u from v, sorted. Sides are decided by
/// distances to the ends of one representative edge per class.
Pof signature(const Graph& g, const ThetaDecomposition& theta, const DistanceMatrix& dm, Vertex u, Vertex v);

/// Classes of σ(u, v) with an edge at u. Requires u ∈ I(v0, v).
Pof ladder_set_oracle(const Graph& g, const ThetaDecomposition& theta, const DistanceMatrix& dm, Vertex u,
                      Vertex v);

/// u, then repeatedly the anti-basis of the cube spanned by the ladder set,
/// until v. Requires u ∈ I(v0, v).
std::vector<Vertex> milestones_oracle(const Graph& g, const ThetaDecomposition& theta, const CubeIndex& index,
                                      const DistanceMatrix& dm, Vertex u, Vertex v);

/// Edge classes from the Djoković relation: xy ~ uv iff
/// d(x,u) + d(y,v) != d(x,v) + d(y,u). Numbered by first edge, like
/// compute_theta. Assumes the relation is transitive (partial cubes).
std::vector<ClassId> djokovic_classes(const Graph& g, const DistanceMatrix& dm);

}  // namespace median

#endif  // MEDIAN_ORACLE_HPP
