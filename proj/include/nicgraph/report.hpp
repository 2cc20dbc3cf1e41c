#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nicgraph/homophily.hpp"
#include "nicgraph/json_io.hpp"
#include "nicgraph/nic.hpp"
#include "nicgraph/oracle.hpp"
#include "nicgraph/synth.hpp"

namespace nicgraph {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct GraphSummary {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::size_t num_classes = 0;
  DirectionMode direction_mode = DirectionMode::undirected;
  bool self_loops_stripped = true;

  bool operator==(const GraphSummary&) const = default;
};

struct MetricReport {
  std::string dataset_id;
  GraphSummary graph;
  HomophilyReport homophily;
  NicReport nic;
  std::optional<ExactMiResult> oracle;
  std::string timestamp;
  std::string tool_version = kToolVersion;
};

/// Homophily, NIC and (optionally) the exact MI of the estimated model.
MetricReport compute_metrics(const LabeledGraph& g, std::string dataset_id, bool with_oracle,
                             ZMode z_mode = ZMode::direct);

Json report_to_json(const MetricReport& report);
MetricReport report_from_json(const Json& j);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

/// Sample Pearson correlation. Throws DegenerateInput on mismatched or short
/// inputs or zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct SweepPoint {
  double target_homophily = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  double same_weight = 0.0;
  double realized_homophily = 0.0;
  double nic_nats = 0.0;
  std::string error;
};

/// Mean and spread over the successful trials of one grid point.
struct SweepSummary {
  double target_homophily = 0.0;
  std::size_t succeeded = 0;
  std::size_t failed = 0;
  double realized_mean = 0.0;
  double nic_mean = 0.0;
  double nic_std = 0.0;
  /// Standard error of nic_mean (sample std / sqrt(n)).
  double nic_se = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // sorted by target, then trial
  std::vector<SweepSummary> summary;
  /// pearson(realized_homophily, nic_nats) over successful points, when
  /// defined.
  std::optional<double> pearson_r;
};

/// For every grid value and trial: calibrate and generate a graph from
/// `tmpl` with trial seed derive_seed(tmpl.seed, trial), then measure edge
/// homophily and NIC. A failing point is recorded and the sweep continues.
/// Output order depends only on the grid, never on scheduling.
SweepResult run_sweep(const SynthConfig& tmpl, std::span<const double> grid, std::size_t trials,
                      std::size_t workers = 0);

Json sweep_to_json(const SweepResult& sweep);
std::string sweep_to_csv(const SweepResult& sweep);

/// Key used for a grid value in joins and CSV output (shortest round-trip
/// decimal form).
std::string grid_key(double value);

/// Reads a two-column `key,value` CSV (optional header row).
std::map<std::string, double> read_key_value_csv(const std::filesystem::path& path);

struct ColumnJoin {
  std::vector<double> keys_matched_x;   // our column, in grid order
  std::vector<double> keys_matched_y;   // external column
  std::vector<std::string> missing_in_external;
  std::vector<std::string> unused_external;
  std::optional<double> pearson_r;
};

/// Joins per-grid-point mean NIC with an external column keyed by grid_key.
ColumnJoin join_sweep_column(const SweepResult& sweep,
                             const std::map<std::string, double>& external);

}  // namespace nicgraph
