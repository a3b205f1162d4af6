#ifndef MEDIAN_PIPELINE_HPP
#define MEDIAN_PIPELINE_HPP

#include <vector>

#include "median/cubes.hpp"
#include "median/eccentricity.hpp"
#include "median/graph.hpp"
#include "median/opposites.hpp"
#include "median/theta.hpp"

namespace median {

struct PipelineOptions {
  Vertex v0 = 0;
  unsigned threads = 1;
  // Renumber vertices in BFS order from v0 before the passes. Same results,
  // better memory locality on large inputs whose ids are far from BFS order.
  bool bfs_relabel = false;
};

/// Wall-clock seconds per stage.
struct StageTimes {
  double relabel = 0;
  double theta = 0;
  double cubes = 0;
  double phi = 0;
  double opposites = 0;
  double psi = 0;
  double total = 0;
};

struct Analysis {
  // With bfs_relabel, theta and cubes use the internal numbering: vertex v
  // of the input is labels[v]. upsilon's vertices and report are in input ids.
  std::vector<Vertex> labels;
  ThetaDecomposition theta;
  CubeIndex cubes;
  DiameterResult upsilon;
  EccReport report;
  StageTimes times;
};

/// Θ-classes, cube enumeration, φ, opposites (and Υ), ψ, eccentricities.
Analysis analyze(const Graph& g, const PipelineOptions& options = {});

}  // namespace median

#endif  // MEDIAN_PIPELINE_HPP
