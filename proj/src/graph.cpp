#include "bibnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bibnet/strings.hpp"

namespace bibnet {

namespace {

template <typename Range>
void add_all_pairs(GraphBuilder& b, const Range& values) {
  for (const auto& v : values) b.add_node(v);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) b.add_weight(values[i], values[j]);
  }
}

std::vector<std::string> distinct_in_order(std::vector<std::string> values) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto& v : values) {
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::coauthor: return "coauthor";
    case GraphKind::country: return "country";
    case GraphKind::institution: return "institution";
    case GraphKind::research_area: return "research-area";
    case GraphKind::keyword: return "keyword";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (auto k : {GraphKind::coauthor, GraphKind::country, GraphKind::institution,
                 GraphKind::research_area, GraphKind::keyword}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool allows_self_loops(GraphKind kind) {
  return kind == GraphKind::country || kind == GraphKind::institution;
}

WeightedGraph::WeightedGraph(GraphKind kind, std::vector<std::string> labels,
                             std::vector<Edge> edges)
    : kind_(kind), labels_(std::move(labels)), edges_(std::move(edges)) {
  const auto n = labels_.size();
  weighted_degree_.assign(n, 0);
  self_loop_.assign(n, 0);
  std::vector<std::size_t> count(n, 0);
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      self_loop_[e.u] += e.weight;
      weighted_degree_[e.u] += 2 * e.weight;
    } else {
      ++count[e.u];
      ++count[e.v];
      weighted_degree_[e.u] += e.weight;
      weighted_degree_[e.v] += e.weight;
    }
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + count[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    if (e.u == e.v) continue;
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
  }
}

std::optional<NodeId> WeightedGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

std::uint64_t WeightedGraph::weight(NodeId a, NodeId b) const {
  Edge key{std::min(a, b), std::max(a, b), 0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  if (it == edges_.end() || it->u != key.u || it->v != key.v) return 0;
  return it->weight;
}

std::uint64_t WeightedGraph::total_weight() const {
  std::uint64_t total = 0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

std::uint32_t GraphBuilder::intern(std::string_view label) {
  auto [it, fresh] = ids_.try_emplace(std::string(label), static_cast<std::uint32_t>(labels_.size()));
  if (fresh) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_node(std::string_view label) { intern(label); }

void GraphBuilder::add_weight(std::string_view a, std::string_view b, std::uint64_t weight) {
  if (weight == 0) throw std::invalid_argument("edge weight must be positive");
  if (a == b && !allows_self_loops(kind_)) {
    throw std::invalid_argument("self-loop on a " + std::string(to_string(kind_)) + " graph");
  }
  auto x = intern(a);
  auto y = intern(b);
  if (x > y) std::swap(x, y);
  weights_[(static_cast<std::uint64_t>(x) << 32) | y] += weight;
}

WeightedGraph GraphBuilder::build() && {
  const auto n = labels_.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return labels_[a] < labels_[b]; });
  std::vector<NodeId> rank(n);
  std::vector<std::string> sorted;
  sorted.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    rank[order[r]] = static_cast<NodeId>(r);
    sorted.push_back(std::move(labels_[order[r]]));
  }
  std::vector<Edge> edges;
  edges.reserve(weights_.size());
  for (const auto& [key, w] : weights_) {
    NodeId u = rank[key >> 32];
    NodeId v = rank[key & 0xFFFFFFFFu];
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, w});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  labels_.clear();
  ids_.clear();
  weights_.clear();
  return WeightedGraph(kind_, std::move(sorted), std::move(edges));
}

WeightedGraph build_coauthorship(const Corpus& corpus) {
  GraphBuilder b(GraphKind::coauthor);
  for (const auto& r : corpus.records()) {
    add_all_pairs(b, distinct_in_order(r.author_full_names));
  }
  return std::move(b).build();
}

WeightedGraph build_country_graph(const Corpus& corpus, const RuleTables& rules) {
  GraphBuilder b(GraphKind::country);
  for (const auto& r : corpus.records()) {
    add_all_pairs(b, extract_countries(r.addresses, ExtractionMode::multiset, rules));
  }
  return std::move(b).build();
}

WeightedGraph build_institution_graph(const Corpus& corpus) {
  GraphBuilder b(GraphKind::institution);
  for (const auto& r : corpus.records()) {
    add_all_pairs(b, extract_institutions(r.addresses, ExtractionMode::multiset));
  }
  return std::move(b).build();
}

WeightedGraph build_cooccurrence(const Corpus& corpus, CooccurrenceField field) {
  GraphBuilder b(field == CooccurrenceField::keyword ? GraphKind::keyword
                                                     : GraphKind::research_area);
  for (const auto& r : corpus.records()) {
    std::vector<std::string> values;
    if (field == CooccurrenceField::keyword) {
      for (const auto& k : r.author_keywords) values.push_back(text::to_lower_ascii(k));
    } else {
      values = r.research_areas;
    }
    add_all_pairs(b, distinct_in_order(std::move(values)));
  }
  return std::move(b).build();
}

WeightedGraph build_graph(const Corpus& corpus, GraphKind kind, const RuleTables& rules) {
  switch (kind) {
    case GraphKind::coauthor: return build_coauthorship(corpus);
    case GraphKind::country: return build_country_graph(corpus, rules);
    case GraphKind::institution: return build_institution_graph(corpus);
    case GraphKind::research_area: return build_cooccurrence(corpus, CooccurrenceField::research_area);
    case GraphKind::keyword: return build_cooccurrence(corpus, CooccurrenceField::keyword);
  }
  throw std::invalid_argument("unknown graph kind");
}

std::vector<std::vector<NodeId>> connected_components(const WeightedGraph& g) {
  const auto n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> comps;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto v : g.neighbors(queue[head])) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

GraphFacts graph_facts(const WeightedGraph& g) {
  GraphFacts f;
  f.node_count = g.node_count();
  f.edge_count = g.edge_count();
  for (const auto& e : g.edges()) {
    if (e.u == e.v) ++f.self_loop_count;
  }
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (g.degree(n) == 0 && g.self_loop_weight(n) == 0) ++f.isolated_count;
  }
  for (const auto& c : connected_components(g)) f.component_sizes.push_back(c.size());
  f.component_count = f.component_sizes.size();
  return f;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> remap(g.node_count(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<NodeId>(i);
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] != kAbsent && remap[e.v] != kAbsent) edges.push_back({remap[e.u], remap[e.v], e.weight});
  }
  return WeightedGraph(g.kind(), std::move(labels), std::move(edges));
}

WeightedGraph largest_component(const WeightedGraph& g) {
  auto comps = connected_components(g);
  if (comps.empty()) return induced_subgraph(g, {});
  return induced_subgraph(g, comps.front());
}

std::vector<WeightedEdge> top_weighted_edges(const WeightedGraph& g, std::size_t k,
                                             bool include_self_loops) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (include_self_loops || e.u != e.v) edges.push_back(e);
  }
  // Edges are already in (u, v) order, which is label order.
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.weight > b.weight; });
  if (edges.size() > k) edges.resize(k);
  std::vector<WeightedEdge> out;
  for (const auto& e : edges) out.push_back({g.label(e.u), g.label(e.v), e.weight});
  return out;
}

}  // namespace bibnet
