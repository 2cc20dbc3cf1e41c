#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nicgraph/graph.hpp"
#include "nicgraph/numeric.hpp"

namespace nicgraph {

/// How neighbour-class proportions are estimated: by counting neighbour
/// labels directly, or through the pairwise connection fractions c.
enum class ZMode { direct, via_c };

std::string_view to_string(ZMode mode) noexcept;
ZMode z_mode_from_string(std::string_view name);

/// Label-dependent connectivity model.
///
///  p(s)     probability that a node has class s
///  c(s, r)  connection fraction from class r into neighbourhoods of class s
///           (optional)
///  z(s, r)  probability that a neighbour of a class-s node has class r
///  q(s, d)  probability that a class-s node has degree d, d = 0..max_degree
///
/// Rows of z whose class never has a neighbour are undefined
/// (z_defined[s] == false); such classes carry all their q mass at d = 0.
struct LabelModel {
  std::size_t num_classes = 0;
  std::size_t max_degree = 0;
  std::vector<double> p;
  Matrix z;
  std::vector<bool> z_defined;
  std::optional<Matrix> c;
  Matrix q;

  bool operator==(const LabelModel&) const = default;
};

/// Builds a model from p, c and q, deriving z(s, r) = p(r) c(s, r) / sum_k p(k) c(s, k).
LabelModel model_from_connectivity(std::vector<double> p, Matrix c, Matrix q);

/// Throws ModelInvalid when shapes disagree, an entry is negative or a
/// probability row misses unit sum by more than `tol`.
void validate_model(const LabelModel& m, double tol = 1e-9);

LabelModel estimate_model(const LabeledGraph& g, ZMode z_mode = ZMode::direct);

/// First degree included in the Bhattacharyya degree sum. The library
/// default is zero; starting at one is kept for comparison.
enum class DegreeRange { from_zero, from_one };

/// BD(s, r) = sum_d sqrt(q_s(d) q_r(d)) (sum_k sqrt(z_sk z_rk))^d.
Matrix bhattacharyya_matrix(const LabelModel& m, DegreeRange range = DegreeRange::from_zero);

struct NicConventions {
  bool self_loops_stripped = true;
  DirectionMode direction_mode = DirectionMode::undirected;
  ZMode z_mode = ZMode::direct;
};

struct NicReport {
  double nic_nats = 0.0;
  /// Same bound with the degree sum starting at d = 1.
  double nic_nats_from_one = 0.0;
  Matrix bd;
  /// -p(s) ln(sum_r p(r) BD(s, r)); these add up to nic_nats.
  std::vector<double> per_class_terms;
  /// Classes whose inner sum underflowed and was floored before the log.
  std::vector<std::size_t> floored_classes;
  LabelModel model;
  std::optional<NicConventions> conventions;
};

/// NIC = -sum_s p(s) ln(sum_r p(r) BD(s, r)), in nats.
NicReport nic(const LabelModel& m);

/// Only the scalar bound, without assembling a report.
double nic_nats(const LabelModel& m, DegreeRange range = DegreeRange::from_zero);

NicReport nic_of_graph(const LabeledGraph& g, ZMode z_mode = ZMode::direct);

}  // namespace nicgraph
