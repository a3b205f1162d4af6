#include "median/eccentricity.hpp"

#include <algorithm>
#include <stdexcept>

#include "median/parallel.hpp"

namespace median {

void summarize(EccReport& report) {
  const std::size_t n = report.ecc.size();
  if (n == 0) throw std::invalid_argument("empty eccentricity vector");
  Vertex far = 0;
  Vertex center = 0;
  for (Vertex u = 1; u < n; ++u) {
    if (report.ecc[u] > report.ecc[far]) far = u;
    if (report.ecc[u] < report.ecc[center]) center = u;
  }
  report.diameter = report.ecc[far];
  report.radius = report.ecc[center];
  report.diametral_pair = {far, report.witness[far]};
  report.center_vertex = center;
}

void compute_psi(CubeIndex& index, const ThetaDecomposition& theta) {
  for (CubeId id = 0; id < index.size(); ++id) {
    CubeRecord& rec = index.at(id);
    if (rec.pof_size == 0) continue;
    if (rec.opposite == kNoCube) throw std::logic_error("opposites not computed");
    const PofView classes = index.pof(id);
    const Vertex down = rec.basis;

    const CubeRecord& turn = index[rec.opposite];
    Hops best = rec.pof_size + turn.phi;
    Vertex witness = turn.mu;

    const CubeId first = index.ingoing_begin(down);
    const CubeId count = index.ingoing_count(down);
    for (CubeId k = 1; k < count; ++k) {
      const CubeRecord& prev = index[first + k];
      bool extends = false;
      for (const ClassId c : classes) {
        if (pof_extension_ok(theta, prev.basis, c)) {
          extends = true;
          break;
        }
      }
      if (extends) continue;
      const Hops candidate = rec.pof_size + prev.psi;
      if (candidate > best) {
        best = candidate;
        witness = prev.psi_witness;
      }
    }
    rec.psi = best;
    rec.psi_witness = witness;
  }
}

EccReport eccentricities(const CubeIndex& index, unsigned threads) {
  const std::size_t n = index.num_vertices();
  EccReport report;
  report.ecc.assign(n, 0);
  report.witness.assign(n, kNoVertex);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto u = static_cast<Vertex>(i);
    Hops best = 0;
    Vertex witness = u;
    auto offer = [&](Hops value, Vertex w) {
      if (value > best || (value == best && w < witness)) {
        best = value;
        witness = w;
      }
    };
    for (const CubeId id : index.outgoing(u)) offer(index[id].phi, index[id].mu);
    const CubeId first = index.ingoing_begin(u);
    for (CubeId k = 1; k < index.ingoing_count(u); ++k) offer(index[first + k].psi, index[first + k].psi_witness);
    report.ecc[u] = best;
    report.witness[u] = witness;
  });
  summarize(report);
  return report;
}

}  // namespace median
