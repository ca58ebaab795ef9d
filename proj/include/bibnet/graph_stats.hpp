#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bibnet/graph.hpp"

namespace bibnet {

/// Source sampling for traversal-based statistics. Unset means exact.
struct Sampling {
  std::optional<std::size_t> sources;
  std::uint64_t seed = 42;
};

// All centralities treat the graph as simple and unweighted: distances are
// hop counts, self-loops and weights are ignored. Results are indexed by
// NodeId.

/// Distinct-neighbour degree / (N - 1). Throws DegenerateError if N < 2.
std::vector<double> degree_centrality(const WeightedGraph& g);

/// Brandes accumulation over shortest paths, endpoints excluded. When
/// `normalized`, divided by (N-1)(N-2)/2; otherwise the raw sum over
/// unordered pairs. Sampled mode runs from the sampled sources only and
/// scales by N / |sample|. Graphs with fewer than 3 nodes give all zeros.
std::vector<double> betweenness_centrality(const WeightedGraph& g, const Sampling& sampling = {},
                                           bool normalized = true);

enum class ClosenessForm {
  conventional,  // (N - 1) / farness
  literal,       // N / farness
};

/// Evaluated within each connected component, N being the component size.
/// Size-1 components yield nullopt. With sampling, a component larger than
/// the sample has its farness estimated from sampled sources as
/// (N - 1) * mean distance to the sources.
std::vector<std::optional<double>> closeness_centrality(const WeightedGraph& g,
                                                        ClosenessForm form = ClosenessForm::conventional,
                                                        const Sampling& sampling = {});

struct ClusteringResult {
  std::vector<double> per_node;
  double average = 0.0;
};

/// Local clustering coefficient; nodes of degree < 2 score 0. Throws
/// DegenerateError on an empty graph.
ClusteringResult clustering(const WeightedGraph& g);

/// Mean hop distance over ordered pairs of the largest component. Throws
/// DegenerateError if that component has fewer than 2 nodes.
double avg_shortest_path(const WeightedGraph& g, const Sampling& sampling = {});

struct SmallWorldReport {
  double avg_shortest_path = 0.0;
  std::size_t component_size = 0;
  double ln_node_count = 0.0;
  double avg_clustering = 0.0;
  bool sampled = false;
  bool small_world_consistent = false;
  std::string verdict;
};

/// Compares L on the largest component with ln N: consistent when
/// L / ln N lies in [0.1, 10]. A heuristic label, not a test.
SmallWorldReport small_world_check(const WeightedGraph& g, const Sampling& sampling = {});

struct PowerLawFit {
  double gamma = 0.0;
  std::uint64_t xmin = 1;
  double ks_statistic = 0.0;
  std::size_t n_tail = 0;
  std::size_t n_samples = 0;
};

struct PowerLawOptions {
  std::size_t min_samples = 50;
  /// Candidate cutoffs must leave at least this many samples in the tail.
  std::size_t min_tail = 50;
};

/// Discrete power-law fit: maximum likelihood exponent for each candidate
/// xmin, keeping the xmin with the smallest Kolmogorov-Smirnov distance.
/// Throws DegenerateError for too few samples, non-positive samples, or a
/// constant sample.
PowerLawFit fit_power_law(std::span<const std::uint64_t> degrees,
                          const PowerLawOptions& options = {});

/// Hurwitz zeta function sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

struct AssortativityResult {
  std::optional<double> r;  // nullopt: zero remaining-degree variance
  std::size_t component_size = 0;
};

/// Degree correlation across edges, computed from the joint remaining-degree
/// distribution. Throws DegenerateError on an edgeless graph.
AssortativityResult degree_assortativity(const WeightedGraph& g);

/// One result per component that has at least one edge, largest first.
std::vector<AssortativityResult> per_component_assortativity(const WeightedGraph& g);

struct CentralityRow {
  std::string label;
  double degree = 0.0;
  double betweenness = 0.0;
  double closeness = 0.0;          // conventional form
  double closeness_literal = 0.0;  // N / farness
};

enum class CentralityColumn { degree, betweenness, closeness };

struct CentralityTable {
  std::vector<CentralityRow> rows;
  std::size_t analyzed_nodes = 0;
  bool sampled = false;

  /// Descending by the column, ties by label.
  void sort_by(CentralityColumn column);
};

/// Degree, betweenness and closeness over the largest component (or the
/// whole graph when `whole_graph`), sorted by betweenness. Nodes whose
/// closeness is undefined are left out.
CentralityTable centrality_table(const WeightedGraph& g, const Sampling& sampling = {},
                                 bool whole_graph = false);

/// Distinct-neighbour degrees of every node.
std::vector<std::uint64_t> degree_sequence(const WeightedGraph& g);

}  // namespace bibnet
