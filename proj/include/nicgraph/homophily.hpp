#pragma once

#include <cstddef>
#include <optional>

#include "nicgraph/graph.hpp"
#include "nicgraph/numeric.hpp"

namespace nicgraph {

/// e(i, j): fraction of stored (ordered) edges running from a class-i node to
/// a class-j node. Undirected graphs store both orientations, so the matrix
/// is symmetric for them.
struct MixingMatrix {
  Matrix e;
  bool symmetric = true;
};

struct HomophilyReport {
  double h_edge = 0.0;
  double h_node = 0.0;
  /// Nodes with an empty neighbourhood, left out of the node-wise average.
  std::size_t isolated_excluded = 0;
  /// Empty when the mixing matrix is degenerate (all edges join one ordered
  /// class pair).
  std::optional<double> assortativity;
  MixingMatrix mixing;
};

MixingMatrix mixing_matrix(const LabeledGraph& g);

double edge_homophily(const LabeledGraph& g);

/// Mean same-label neighbour fraction over nodes with at least one
/// neighbour. `isolated_excluded` (optional) receives the number of skipped
/// nodes.
double node_homophily(const LabeledGraph& g, std::size_t* isolated_excluded = nullptr);

/// Newman's label assortativity r = (Tr E - |E|_F^2) / (1 - |E|_F^2).
double assortativity(const LabeledGraph& g);
double assortativity(const MixingMatrix& mixing);

HomophilyReport homophily_report(const LabeledGraph& g);

}  // namespace nicgraph
