#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bibnet/normalize.hpp"
#include "bibnet/record.hpp"

namespace bibnet {

enum class GraphKind { coauthor, country, institution, research_area, keyword };

std::string_view to_string(GraphKind kind);
/// Accepts "coauthor", "country", "institution", "research-area", "keyword".
std::optional<GraphKind> parse_graph_kind(std::string_view name);
bool allows_self_loops(GraphKind kind);

using NodeId = std::uint32_t;

/// Canonical edge: u <= v. u == v is a self-loop.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  std::uint64_t weight = 0;

  bool operator==(const Edge&) const = default;
};

/// Undirected graph with integer edge weights and string labels.
///
/// Node ids follow the lexicographic order of the labels, so two graphs with
/// the same labels and weights are identical regardless of how they were
/// built. Edges are sorted by (u, v). The neighbour lists give the simple
/// view of the graph (distinct neighbours, no self-loops) that path-based
/// statistics run on.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  GraphKind kind() const { return kind_; }
  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(NodeId n) const { return labels_[n]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId n) const {
    return {adjacency_.data() + offsets_[n], adjacency_.data() + offsets_[n + 1]};
  }
  /// Distinct neighbours, self excluded.
  std::size_t degree(NodeId n) const { return offsets_[n + 1] - offsets_[n]; }
  /// Sum of incident weights; a self-loop contributes twice.
  std::uint64_t weighted_degree(NodeId n) const { return weighted_degree_[n]; }
  std::uint64_t self_loop_weight(NodeId n) const { return self_loop_[n]; }
  /// Weight of edge {a, b}, 0 if absent.
  std::uint64_t weight(NodeId a, NodeId b) const;
  /// Sum of all edge weights, self-loops counted once.
  std::uint64_t total_weight() const;

  bool operator==(const WeightedGraph& o) const {
    return kind_ == o.kind_ && labels_ == o.labels_ && edges_ == o.edges_;
  }

 private:
  friend class GraphBuilder;
  friend WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes);
  WeightedGraph(GraphKind kind, std::vector<std::string> labels, std::vector<Edge> edges);

  GraphKind kind_ = GraphKind::coauthor;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint64_t> weighted_degree_;
  std::vector<std::uint64_t> self_loop_;
};

/// Accumulates nodes and edge weights, then freezes them into a
/// WeightedGraph. Weights added to the same unordered pair are summed.
class GraphBuilder {
 public:
  explicit GraphBuilder(GraphKind kind) : kind_(kind) {}

  void add_node(std::string_view label);
  /// Throws std::invalid_argument for a self-loop on a kind that forbids them
  /// or for a zero weight.
  void add_weight(std::string_view a, std::string_view b, std::uint64_t weight = 1);

  WeightedGraph build() &&;

 private:
  std::uint32_t intern(std::string_view label);

  GraphKind kind_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::unordered_map<std::uint64_t, std::uint64_t> weights_;
};

// ---------------------------------------------------------------------------
// Construction from a corpus

/// One node per author (solo authors become isolated nodes); each pair of
/// distinct co-authors on a paper adds 1 to their edge.
WeightedGraph build_coauthorship(const Corpus& corpus);

/// Pairs every two address segments of a paper. Equal countries in
/// different segments form a self-loop.
WeightedGraph build_country_graph(const Corpus& corpus,
                                  const RuleTables& rules = RuleTables::defaults());
WeightedGraph build_institution_graph(const Corpus& corpus);

enum class CooccurrenceField { research_area, keyword };

/// Pairs the distinct values of the field within each paper. Keywords are
/// lower-cased first.
WeightedGraph build_cooccurrence(const Corpus& corpus, CooccurrenceField field);

WeightedGraph build_graph(const Corpus& corpus, GraphKind kind,
                          const RuleTables& rules = RuleTables::defaults());

// ---------------------------------------------------------------------------
// Structure

struct GraphFacts {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t self_loop_count = 0;
  /// Nodes without any incident edge; a self-loop makes a node non-isolated.
  std::size_t isolated_count = 0;
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;  // descending
};

GraphFacts graph_facts(const WeightedGraph& g);

/// Connected components, largest first (ties: smallest member first). Each
/// component lists its members ascending.
std::vector<std::vector<NodeId>> connected_components(const WeightedGraph& g);

/// Subgraph induced on `nodes`, labels and weights preserved.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes);
WeightedGraph largest_component(const WeightedGraph& g);

struct WeightedEdge {
  std::string a;  // a <= b
  std::string b;
  std::uint64_t weight = 0;

  bool operator==(const WeightedEdge&) const = default;
};

/// Weight descending, ties by (a, b). Throws std::invalid_argument if k < 1.
std::vector<WeightedEdge> top_weighted_edges(const WeightedGraph& g, std::size_t k,
                                             bool include_self_loops);

// ---------------------------------------------------------------------------
// Export

/// GraphML with node id = label and an integer `weight` edge attribute.
void write_graphml(std::ostream& out, const WeightedGraph& g);
/// Undirected DOT with `weight` edge attributes.
void write_dot(std::ostream& out, const WeightedGraph& g);
/// label_a,label_b,weight in canonical pair order.
void write_edge_list_csv(std::ostream& out, const WeightedGraph& g);

}  // namespace bibnet
