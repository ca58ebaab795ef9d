#include "bibnet/graph_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bibnet/error.hpp"
#include "bibnet/sampling.hpp"

namespace bibnet {

namespace {

constexpr std::int32_t kUnreached = -1;

/// Breadth-first search state reused across sources; only touched entries
/// are reset between runs.
class Bfs {
 public:
  explicit Bfs(const WeightedGraph& g)
      : g_(g), dist_(g.node_count(), kUnreached), sigma_(g.node_count(), 0.0) {}

  void run(NodeId source, bool count_paths) {
    for (auto v : order_) {
      dist_[v] = kUnreached;
      sigma_[v] = 0.0;
    }
    order_.clear();
    dist_[source] = 0;
    sigma_[source] = 1.0;
    order_.push_back(source);
    for (std::size_t head = 0; head < order_.size(); ++head) {
      NodeId v = order_[head];
      for (auto w : g_.neighbors(v)) {
        if (dist_[w] == kUnreached) {
          dist_[w] = dist_[v] + 1;
          order_.push_back(w);
        }
        if (count_paths && dist_[w] == dist_[v] + 1) sigma_[w] += sigma_[v];
      }
    }
  }

  /// Reached nodes in non-decreasing distance order.
  const std::vector<NodeId>& order() const { return order_; }
  std::int32_t dist(NodeId v) const { return dist_[v]; }
  double sigma(NodeId v) const { return sigma_[v]; }

 private:
  const WeightedGraph& g_;
  std::vector<std::int32_t> dist_;
  std::vector<double> sigma_;
  std::vector<NodeId> order_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct Farness {
  std::vector<std::optional<double>> value;  // estimated or exact sum of distances
  std::vector<std::size_t> component_size;
};

Farness farness_of(const WeightedGraph& g, const Sampling& sampling) {
  const auto n = g.node_count();
  Farness f{std::vector<std::optional<double>>(n), std::vector<std::size_t>(n, 1)};
  Bfs bfs(g);
  auto comps = connected_components(g);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    const auto size = comp.size();
    for (auto v : comp) f.component_size[v] = size;
    if (size < 2) continue;
    if (!sampling.sources || *sampling.sources >= size) {
      for (auto x : comp) {
        bfs.run(x, false);
        double total = 0;
        for (auto y : bfs.order()) total += bfs.dist(y);
        f.value[x] = total;
      }
      continue;
    }
    auto picks = sample_indices(size, *sampling.sources, ci == 0 ? sampling.seed : mix_seed(sampling.seed, ci));
    std::vector<double> sum(n, 0.0);
    std::vector<std::size_t> count(n, 0);
    for (auto p : picks) {
      NodeId s = comp[p];
      bfs.run(s, false);
      for (auto y : bfs.order()) {
        if (y == s) continue;
        sum[y] += bfs.dist(y);
        ++count[y];
      }
    }
    for (auto x : comp) {
      if (count[x] == 0) {
        bfs.run(x, false);
        double total = 0;
        for (auto y : bfs.order()) total += bfs.dist(y);
        f.value[x] = total;
      } else {
        f.value[x] = static_cast<double>(size - 1) * sum[x] / static_cast<double>(count[x]);
      }
    }
  }
  return f;
}

/// Degree correlation over the edges among `nodes` (a union of components).
/// Built from the joint distribution e_jk of remaining degrees and its
/// marginal q_k, in centred form for numerical stability.
std::optional<double> assortativity_over(const WeightedGraph& g, std::span<const NodeId> nodes) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> joint;
  std::int64_t total = 0;
  for (auto u : nodes) {
    const auto j = static_cast<std::int64_t>(g.degree(u)) - 1;
    for (auto v : g.neighbors(u)) {
      ++joint[{j, static_cast<std::int64_t>(g.degree(v)) - 1}];
      ++total;
    }
  }
  if (total == 0) throw DegenerateError("assortativity of an edgeless graph");
  std::map<std::int64_t, long double> q;
  for (const auto& [jk, c] : joint) q[jk.second] += static_cast<long double>(c) / total;
  if (q.size() < 2) return std::nullopt;
  long double mean = 0;
  for (const auto& [k, p] : q) mean += k * p;
  long double variance = 0;
  for (const auto& [k, p] : q) variance += (k - mean) * (k - mean) * p;
  if (variance == 0) return std::nullopt;
  long double cov = 0;
  for (const auto& [jk, c] : joint) {
    long double e = static_cast<long double>(c) / total;
    cov += (jk.first - mean) * (jk.second - mean) * e;
  }
  return std::clamp(static_cast<double>(cov / variance), -1.0, 1.0);
}

}  // namespace

std::vector<double> degree_centrality(const WeightedGraph& g) {
  const auto n = g.node_count();
  if (n < 2) throw DegenerateError("degree centrality needs at least two nodes");
  std::vector<double> out(n);
  for (NodeId v = 0; v < n; ++v) out[v] = static_cast<double>(g.degree(v)) / static_cast<double>(n - 1);
  return out;
}

std::vector<double> betweenness_centrality(const WeightedGraph& g, const Sampling& sampling,
                                           bool normalized) {
  const auto n = g.node_count();
  std::vector<double> bc(n, 0.0);
  if (n < 3) return bc;
  auto sources = sample_indices(n, sampling.sources.value_or(n), sampling.seed);
  Bfs bfs(g);
  std::vector<double> delta(n, 0.0);
  for (auto s : sources) {
    bfs.run(static_cast<NodeId>(s), true);
    const auto& order = bfs.order();
    for (auto v : order) delta[v] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      const double coeff = (1.0 + delta[w]) / bfs.sigma(w);
      for (auto v : g.neighbors(w)) {
        if (bfs.dist(v) == bfs.dist(w) - 1) delta[v] += bfs.sigma(v) * coeff;
      }
      if (w != s) bc[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both ends.
  double scale = 0.5 * static_cast<double>(n) / static_cast<double>(sources.size());
  if (normalized) scale *= 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (auto& b : bc) b *= scale;
  return bc;
}

std::vector<std::optional<double>> closeness_centrality(const WeightedGraph& g, ClosenessForm form,
                                                        const Sampling& sampling) {
  auto f = farness_of(g, sampling);
  std::vector<std::optional<double>> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!f.value[v] || *f.value[v] <= 0) continue;
    const auto size = static_cast<double>(f.component_size[v]);
    out[v] = (form == ClosenessForm::literal ? size : size - 1) / *f.value[v];
  }
  return out;
}

ClusteringResult clustering(const WeightedGraph& g) {
  const auto n = g.node_count();
  if (n == 0) throw DegenerateError("clustering of an empty graph");
  ClusteringResult res;
  res.per_node.assign(n, 0.0);
  std::vector<char> mark(n, 0);
  double sum = 0;
  for (NodeId u = 0; u < n; ++u) {
    const auto d = g.degree(u);
    if (d < 2) continue;
    for (auto v : g.neighbors(u)) mark[v] = 1;
    std::uint64_t links = 0;
    for (auto v : g.neighbors(u)) {
      for (auto w : g.neighbors(v)) links += mark[w];
    }
    for (auto v : g.neighbors(u)) mark[v] = 0;
    // Every triangle through u was seen from both of its other corners.
    const double triangles = static_cast<double>(links) / 2.0;
    res.per_node[u] = triangles / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
    sum += res.per_node[u];
  }
  res.average = sum / static_cast<double>(n);
  return res;
}

double avg_shortest_path(const WeightedGraph& g, const Sampling& sampling) {
  auto h = largest_component(g);
  const auto n = h.node_count();
  if (n < 2) throw DegenerateError("average shortest path needs a component of at least two nodes");
  auto sources = sample_indices(n, sampling.sources.value_or(n), sampling.seed);
  Bfs bfs(h);
  double total = 0;
  for (auto s : sources) {
    bfs.run(static_cast<NodeId>(s), false);
    for (auto v : bfs.order()) total += bfs.dist(v);
  }
  return total / (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
}

SmallWorldReport small_world_check(const WeightedGraph& g, const Sampling& sampling) {
  SmallWorldReport rep;
  auto h = largest_component(g);
  rep.component_size = h.node_count();
  rep.avg_shortest_path = avg_shortest_path(h, sampling);
  rep.ln_node_count = std::log(static_cast<double>(rep.component_size));
  rep.avg_clustering = clustering(h).average;
  rep.sampled = sampling.sources && *sampling.sources < rep.component_size;
  const double ratio = rep.avg_shortest_path / rep.ln_node_count;
  rep.small_world_consistent = ratio >= 0.1 && ratio <= 10.0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s: L = %.4g, ln N = %.4g (L / ln N = %.3g), clustering = %.3g",
                rep.small_world_consistent ? "small-world-consistent" : "not small-world",
                rep.avg_shortest_path, rep.ln_node_count, ratio, rep.avg_clustering);
  rep.verdict = buf;
  return rep;
}

AssortativityResult degree_assortativity(const WeightedGraph& g) {
  std::vector<NodeId> all(g.node_count());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  return {assortativity_over(g, all), g.node_count()};
}

std::vector<AssortativityResult> per_component_assortativity(const WeightedGraph& g) {
  std::vector<AssortativityResult> out;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    out.push_back({assortativity_over(g, comp), comp.size()});
  }
  return out;
}

void CentralityTable::sort_by(CentralityColumn column) {
  auto key = [column](const CentralityRow& r) {
    switch (column) {
      case CentralityColumn::degree: return r.degree;
      case CentralityColumn::betweenness: return r.betweenness;
      case CentralityColumn::closeness: return r.closeness;
    }
    return 0.0;
  };
  std::sort(rows.begin(), rows.end(), [&](const CentralityRow& a, const CentralityRow& b) {
    if (key(a) != key(b)) return key(a) > key(b);
    return a.label < b.label;
  });
}

CentralityTable centrality_table(const WeightedGraph& g, const Sampling& sampling, bool whole_graph) {
  auto h = whole_graph ? g : largest_component(g);
  CentralityTable t;
  t.analyzed_nodes = h.node_count();
  t.sampled = sampling.sources && *sampling.sources < h.node_count();
  auto degree = degree_centrality(h);
  auto between = betweenness_centrality(h, sampling);
  auto far = farness_of(h, sampling);
  for (NodeId v = 0; v < h.node_count(); ++v) {
    if (!far.value[v] || *far.value[v] <= 0) continue;
    const auto size = static_cast<double>(far.component_size[v]);
    t.rows.push_back({h.label(v), degree[v], between[v], (size - 1) / *far.value[v],
                      size / *far.value[v]});
  }
  t.sort_by(CentralityColumn::betweenness);
  return t;
}

std::vector<std::uint64_t> degree_sequence(const WeightedGraph& g) {
  std::vector<std::uint64_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = g.degree(v);
  return out;
}

}  // namespace bibnet
