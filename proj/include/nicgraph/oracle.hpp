#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nicgraph/graph.hpp"
#include "nicgraph/nic.hpp"

namespace nicgraph {

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

/// Every unordered neighbourhood label configuration with at most
/// `max_degree` members, stored as class-count vectors. Ordered by degree,
/// then by descending counts (e.g. [2,0], [1,1], [0,2]).
class ConfigEnumeration {
 public:
  ConfigEnumeration(std::size_t num_classes, std::size_t max_degree)
      : num_classes_(num_classes), max_degree_(max_degree) {}

  std::size_t num_classes() const noexcept { return num_classes_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept {
    return num_classes_ == 0 ? 0 : counts_.size() / num_classes_;
  }
  std::span<const std::uint32_t> entry(std::size_t i) const noexcept {
    return {counts_.data() + i * num_classes_, num_classes_};
  }
  void push(std::span<const std::uint32_t> counts) {
    counts_.insert(counts_.end(), counts.begin(), counts.end());
  }

 private:
  std::size_t num_classes_;
  std::size_t max_degree_;
  std::vector<std::uint32_t> counts_;
};

/// Number of configurations: sum_{d=0..D} binom(d+C-1, C-1) = binom(D+C, C).
/// Saturates at SIZE_MAX.
std::size_t config_count(std::size_t num_classes, std::size_t max_degree);

/// Streams configurations in enumeration order without materialising them.
/// Throws EnumerationTooLarge when config_count exceeds `cap`.
void for_each_config(std::size_t num_classes, std::size_t max_degree, std::size_t cap,
                     const std::function<void(std::span<const std::uint32_t>)>& visit);

ConfigEnumeration enumerate_configs(std::size_t num_classes, std::size_t max_degree,
                                    std::size_t cap = kDefaultEnumerationCap);

/// P(configuration | class s) = q_s(d) d! / prod_k n_k! prod_k z_sk^n_k.
double config_prob_given_label(const LabelModel& m, std::span<const std::uint32_t> counts,
                               std::size_t s);

struct ExactMiResult {
  double mi_nats = 0.0;
  double h_marginal = 0.0;
  double h_conditional = 0.0;
  std::size_t num_configs = 0;
};

/// MI between a node's label and its neighbourhood configuration under the
/// multinomial neighbourhood model, by full enumeration.
ExactMiResult exact_mi(const LabelModel& m, std::size_t cap = kDefaultEnumerationCap);

/// sum over configurations of sqrt(P(cfg | s) P(cfg | r)), for every pair.
Matrix bhattacharyya_by_enumeration(const LabelModel& m, std::size_t cap = kDefaultEnumerationCap);

/// Draws a graph from the model: labels i.i.d. from p; each node's degree
/// from q of its class; each neighbour's class from z of its class, then a
/// uniform node of that class. Neighbourhoods are drawn independently per
/// node and stored as out-edges, so the result is directed
/// (out_neighbors) and not globally consistent as a simple graph.
LabeledGraph sample_graph_from_model(const LabelModel& m, std::size_t num_nodes,
                                     std::uint64_t seed);

/// Non-empty when num_nodes is small relative to the model's maximum degree.
std::optional<std::string> sampling_warning(const LabelModel& m, std::size_t num_nodes);

/// Random model with p, every z row and every q row (over 0..max_degree)
/// drawn from a flat Dirichlet. With `with_connectivity`, c entries are
/// uniform on (0, 1) and z is derived from c instead.
LabelModel random_label_model(std::size_t num_classes, std::size_t max_degree, std::uint64_t seed,
                              bool with_connectivity = false);

}  // namespace nicgraph
