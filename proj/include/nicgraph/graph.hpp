#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nicgraph {

using NodeId = std::uint32_t;
using ClassId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Which edges make up N(i): both orientations, outgoing, or incoming.
enum class DirectionMode { undirected, out_neighbors, in_neighbors };

std::string_view to_string(DirectionMode mode) noexcept;
DirectionMode direction_mode_from_string(std::string_view name);

struct IngestOptions {
  bool strip_self_loops = true;
  bool symmetrize = true;
  bool label_compaction = true;
  /// Used only when symmetrize is false.
  DirectionMode directed_mode = DirectionMode::out_neighbors;
};

/// Immutable node-labelled graph with dense node ids 0..N-1 and dense class
/// ids 0..C-1. Edges are unique ordered pairs; in undirected mode every edge
/// is stored in both orientations. Neighbourhoods are precomputed (CSR) for
/// the active direction mode and sorted ascending.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Edges are deduplicated; in undirected mode the reverse of every edge is
  /// added. Labels must already be dense class ids. `num_classes` of 0 means
  /// 1 + max label. `label_vocabulary[c]` is the original id of class c
  /// (defaults to the identity).
  LabeledGraph(std::size_t num_nodes, std::vector<ClassId> labels, std::vector<Edge> edges,
               DirectionMode mode, bool self_loops_stripped = false,
               std::size_t num_classes = 0, std::vector<std::int64_t> label_vocabulary = {});

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  DirectionMode direction_mode() const noexcept { return mode_; }
  bool self_loops_stripped() const noexcept { return self_loops_stripped_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const ClassId> labels() const noexcept { return labels_; }
  ClassId label(NodeId i) const noexcept { return labels_[i]; }
  std::span<const std::int64_t> label_vocabulary() const noexcept { return vocabulary_; }

  /// Sorted neighbours of `i` under the active direction mode. Requires i < N.
  std::span<const NodeId> neighborhood(NodeId i) const noexcept {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(NodeId i) const noexcept { return offsets_[i + 1] - offsets_[i]; }
  std::size_t max_degree() const noexcept;

  bool operator==(const LabeledGraph& other) const;

 private:
  void build_adjacency();

  std::vector<ClassId> labels_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> vocabulary_;
  std::size_t num_classes_ = 0;
  DirectionMode mode_ = DirectionMode::undirected;
  bool self_loops_stripped_ = false;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

std::vector<NodeId> neighborhood(const LabeledGraph& g, NodeId i);

LabeledGraph symmetrize(const LabeledGraph& g);
LabeledGraph strip_self_loops(const LabeledGraph& g);
/// Reinterprets the stored edge set under another direction mode; switching
/// to undirected symmetrizes.
LabeledGraph with_direction(const LabeledGraph& g, DirectionMode mode);

/// Plain edge list ("src dst" per line, '#' comments) plus a labels file
/// ("node_id<TAB>label" per line).
LabeledGraph load_edge_list(const std::filesystem::path& edges_path,
                            const std::filesystem::path& labels_path, const IngestOptions& opts);

/// Geom-GCN distribution folder: one *graph_edges* file and one
/// *node_feature_label* file.
LabeledGraph load_geomgcn_folder(const std::filesystem::path& dir, const IngestOptions& opts);

/// Canonical JSON document {num_nodes, num_classes, direction_mode, labels, edges}.
std::string to_json_string(const LabeledGraph& g);
LabeledGraph graph_from_json_string(std::string_view text);
void save_graph(const LabeledGraph& g, const std::filesystem::path& path);
LabeledGraph load_graph_json(const std::filesystem::path& path);

/// Dispatches on the path: directory -> Geom-GCN folder, *.json -> canonical
/// JSON (ingest options still applied), anything else is rejected.
LabeledGraph load_graph(const std::filesystem::path& path, const IngestOptions& opts);

/// Applies strip/symmetrize/direction options to an already-built graph.
LabeledGraph apply_ingest_options(const LabeledGraph& g, const IngestOptions& opts);

}  // namespace nicgraph
