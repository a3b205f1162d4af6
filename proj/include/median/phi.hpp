#ifndef MEDIAN_PHI_HPP
#define MEDIAN_PHI_HPP

#include "median/cubes.hpp"
#include "median/theta.hpp"

namespace median {

/**
 * Fills CubeRecord::phi and CubeRecord::mu for every record.
 *
 * phi(u, L) is the largest d(u, v) over vertices v with u on a shortest
 * (v0, v)-path whose ladder set at u is L; mu is one such v. Records are
 * visited from the far end of the BFS order back to v0. Each record pushes
 * |X| + phi(u, L) down into every cube (u⁻, X) ending at u, unless some class
 * of L extends X at u⁻ (then the ladder set at u⁻ would be larger than X).
 */
void compute_phi(CubeIndex& index, const ThetaDecomposition& theta);

}  // namespace median

#endif  // MEDIAN_PHI_HPP
