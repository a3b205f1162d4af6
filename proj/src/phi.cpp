#include "median/phi.hpp"

namespace median {

void compute_phi(CubeIndex& index, const ThetaDecomposition& theta) {
  for (CubeId id = static_cast<CubeId>(index.size()); id-- > 0;) {
    CubeRecord& rec = index.at(id);
    if (rec.pof_size == 0) continue;
    if (rec.phi == 0) {
      rec.phi = rec.pof_size;
      rec.mu = rec.anti_basis;
    }
    const Vertex u = rec.basis;
    const PofView ladder = index.pof(id);
    const Hops reach = rec.phi;
    const Vertex witness = rec.mu;

    const CubeId first = index.ingoing_begin(u);
    const CubeId count = index.ingoing_count(u);
    for (CubeId k = 1; k < count; ++k) {
      CubeRecord& below = index.at(first + k);
      bool extends = false;
      for (const ClassId j : ladder) {
        if (pof_extension_ok(theta, below.basis, j)) {
          extends = true;
          break;
        }
      }
      if (extends) continue;
      const Hops candidate = below.pof_size + reach;
      if (candidate > below.phi) {
        below.phi = candidate;
        below.mu = witness;
      }
    }
  }
}

}  // namespace median
