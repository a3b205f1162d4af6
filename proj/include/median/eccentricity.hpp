#ifndef MEDIAN_ECCENTRICITY_HPP
#define MEDIAN_ECCENTRICITY_HPP

#include <utility>
#include <vector>

#include "median/cubes.hpp"
#include "median/theta.hpp"

namespace median {

struct EccReport {
  std::vector<Hops> ecc;
  std::vector<Vertex> witness;  // a farthest vertex from each u
  Hops diameter = 0;
  Hops radius = 0;
  std::pair<Vertex, Vertex> diametral_pair{0, 0};
  Vertex center_vertex = 0;
};

/// Fills diameter, radius, pair and center from ecc/witness. The pair starts
/// at the smallest vertex of maximum eccentricity, the center is the smallest
/// vertex of minimum eccentricity.
void summarize(EccReport& report);

/**
 * Fills CubeRecord::psi and psi_witness for every record with a nonempty
 * class set. Needs phi and the memoized opposites.
 *
 * ψ(u, X) is the largest d(u, v) over down-up paths whose last cube into u is
 * the record (u⁻ → u, X). Either the path turns at u⁻ (|X| + φ at the
 * opposite of X in u⁻), or it continues through an earlier ingoing record
 * (u⁻, X⁻) whose basis has no edge of any class of X.
 */
void compute_psi(CubeIndex& index, const ThetaDecomposition& theta);

/// ecc(u) = max(φ over outgoing records of u, ψ over nonempty ingoing
/// records of u). Ties for the witness go to the smallest vertex id.
EccReport eccentricities(const CubeIndex& index, unsigned threads = 1);

}  // namespace median

#endif  // MEDIAN_ECCENTRICITY_HPP
