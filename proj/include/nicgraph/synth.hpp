#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "nicgraph/graph.hpp"

namespace nicgraph {

/// Parameters of the label-dependent preferential-attachment generator.
struct SynthConfig {
  std::size_t num_nodes = 1000;
  std::size_t num_classes = 2;
  /// Edges added per new node.
  std::size_t m = 2;
  double target_homophily = 0.5;
  /// Empty means uniform.
  std::vector<double> class_priors;
  std::uint64_t seed = 0;
  /// Nodes in the seed graph; 0 means max(m + 1, 2C).
  std::size_t core_size = 0;

  // Calibration loop.
  double calibration_tol = 0.02;
  std::size_t pilot_nodes = 3000;
  std::size_t pilot_seeds = 3;
  std::size_t max_iterations = 25;

  bool operator==(const SynthConfig&) const = default;
};

void validate_config(const SynthConfig& cfg);
std::vector<double> effective_priors(const SynthConfig& cfg);
std::size_t effective_core_size(const SynthConfig& cfg);

/// Grows a graph by preferential attachment. A new node of class a links to
/// m distinct existing nodes, picking node v with probability proportional
/// to degree(v) * w(a, label(v)), where w is `same_weight` for equal labels
/// and (1 - same_weight) / (C - 1) otherwise. When fewer than m nodes have
/// positive weight the new node links to all of them. The result is
/// undirected and fully determined by cfg.seed.
LabeledGraph generate_pa_graph_with_weight(const SynthConfig& cfg, double same_weight);

/// Bisection on the same-label weight so that the realised edge homophily of
/// pilot graphs is within cfg.calibration_tol of cfg.target_homophily.
/// Throws InfeasibleTarget when the loop does not converge.
double calibrate_homophily(const SynthConfig& cfg);

struct GeneratedGraph {
  LabeledGraph graph;
  double same_weight = 0.0;
};

/// Calibrates, then generates at full size.
GeneratedGraph generate_pa_graph(const SynthConfig& cfg);

/// Class-conditional Gaussian node features.
struct GaussianMixtureModel {
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covariances;
  std::vector<double> priors;

  std::size_t num_classes() const noexcept { return priors.size(); }
  std::size_t dim() const noexcept { return means.empty() ? 0 : std::size_t(means.front().size()); }
};

/// Checks shapes, symmetric positive-definite covariances and unit-sum priors.
void validate_gmm(const GaussianMixtureModel& gmm);

/// One row per node, drawn from the Gaussian of the node's class. Each class
/// uses its own random substream derived from `seed`.
Eigen::MatrixXd attach_features(const LabeledGraph& g, const GaussianMixtureModel& gmm,
                                std::uint64_t seed);

enum class MapMethod { closed_form_1d, quadrature_1d, monte_carlo };

MapMethod map_method_from_string(std::string_view name);

struct MapOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

/// Accuracy of the single-node MAP rule argmax_k p(h | k) p(k), i.e.
/// sum_k p(k) Pr[predict k | k]. The two 1-D methods need scalar features.
double map_accuracy(const GaussianMixtureModel& gmm, MapMethod method, const MapOptions& opts = {});

}  // namespace nicgraph
