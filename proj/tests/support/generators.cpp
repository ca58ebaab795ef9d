#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace gen {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::string node_label(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%07zu", i);
  return buf;
}

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit(rng) * static_cast<double>(bound));
}

bibnet::WeightedGraph from_pair_set(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  bibnet::GraphBuilder b(bibnet::GraphKind::coauthor);
  for (std::size_t i = 0; i < n; ++i) b.add_node(node_label(i));
  for (const auto& [u, v] : edges) b.add_weight(node_label(u), node_label(v));
  return std::move(b).build();
}

std::set<std::pair<std::size_t, std::size_t>> lattice_edges(std::size_t n, std::size_t k) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      std::size_t a = i, b = (i + j) % n;
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return edges;
}

}  // namespace

bibnet::WeightedGraph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::set<std::pair<std::size_t, std::size_t>> s;
  for (auto [u, v] : edges) s.insert({std::min(u, v), std::max(u, v)});
  return from_pair_set(n, s);
}

bibnet::WeightedGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit(rng) < p) edges.insert({i, j});
    }
  }
  return from_pair_set(n, edges);
}

bibnet::WeightedGraph ring_lattice(std::size_t n, std::size_t k) { return from_pair_set(n, lattice_edges(n, k)); }

bibnet::WeightedGraph watts_strogatz(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = lattice_edges(n, k);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t b = (i + j) % n;
      std::pair<std::size_t, std::size_t> e{std::min(i, b), std::max(i, b)};
      if (unit(rng) >= p || !edges.count(e)) continue;
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t c = below(rng, n);
        std::pair<std::size_t, std::size_t> f{std::min(i, c), std::max(i, c)};
        if (c == i || edges.count(f)) continue;
        edges.erase(e);
        edges.insert(f);
        break;
      }
    }
  }
  return from_pair_set(n, edges);
}

bibnet::WeightedGraph star(std::size_t leaves) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.insert({0, i});
  return from_pair_set(leaves + 1, edges);
}

bibnet::WeightedGraph cycle(std::size_t n) { return ring_lattice(n, 2); }

bibnet::WeightedGraph complete(std::size_t n) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.insert({i, j});
  }
  return from_pair_set(n, edges);
}

DiscretePowerLaw::DiscretePowerLaw(double gamma, std::uint64_t xmin, std::uint64_t table_size)
    : gamma_(gamma), xmin_(xmin) {
  cdf_.resize(table_size);
  long double total = 0;
  // Sum from the smallest terms upwards for accuracy, then add the integral
  // estimate of the tail beyond the table.
  std::vector<long double> mass(table_size);
  for (std::uint64_t i = 0; i < table_size; ++i) mass[i] = std::pow(static_cast<long double>(xmin + i), -gamma);
  for (std::uint64_t i = table_size; i-- > 0;) total += mass[i];
  const long double end = static_cast<long double>(xmin + table_size) - 0.5L;
  total += std::pow(end, 1 - static_cast<long double>(gamma)) / (gamma - 1);
  long double running = 0;
  for (std::uint64_t i = 0; i < table_size; ++i) {
    running += mass[i];
    cdf_[i] = static_cast<double>(running / total);
  }
}

std::vector<std::uint64_t> DiscretePowerLaw::sample(std::size_t n, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& x : out) {
    double u = unit(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it != cdf_.end()) {
      x = xmin_ + static_cast<std::uint64_t>(it - cdf_.begin());
    } else {
      // Beyond the table: continuous tail approximation.
      const double end = static_cast<double>(xmin_ + cdf_.size()) - 0.5;
      const double rest = (u - cdf_.back()) / (1 - cdf_.back());
      x = static_cast<std::uint64_t>(end * std::pow(1 - rest, -1 / (gamma_ - 1)) + 0.5);
    }
  }
  return out;
}

std::vector<std::uint64_t> geometric(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& x : out) {
    x = 1;
    while (unit(rng) >= p) ++x;
  }
  return out;
}

std::vector<bibnet::BiblioRecord> random_author_records(std::size_t records, std::size_t pool,
                                                       std::size_t max_authors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bibnet::BiblioRecord> out(records);
  for (std::size_t r = 0; r < records; ++r) {
    auto& rec = out[r];
    rec.title = "paper " + std::to_string(r);
    const std::size_t m = below(rng, max_authors + 1);
    std::set<std::size_t> chosen;
    while (chosen.size() < std::min(m, pool)) chosen.insert(below(rng, pool));
    for (auto a : chosen) rec.author_full_names.push_back("Author " + node_label(a));
    std::shuffle(rec.author_full_names.begin(), rec.author_full_names.end(), rng);
  }
  return out;
}

std::vector<bibnet::BiblioRecord> preferential_corpus(std::size_t authors, double p_new, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bibnet::BiblioRecord> out;
  std::vector<std::size_t> appearances;  // one entry per authorship
  std::size_t next_author = 0;
  while (next_author < authors) {
    bibnet::BiblioRecord rec;
    rec.title = "paper " + std::to_string(out.size());
    rec.times_cited = static_cast<int>(below(rng, 50));
    const std::size_t m = 1 + below(rng, 6);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t a;
      if (appearances.empty() || unit(rng) < p_new) {
        if (next_author >= authors) break;
        a = next_author++;
      } else {
        a = appearances[below(rng, appearances.size())];
      }
      if (std::find(chosen.begin(), chosen.end(), a) == chosen.end()) chosen.push_back(a);
    }
    for (auto a : chosen) {
      appearances.push_back(a);
      rec.author_full_names.push_back(node_label(a));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace gen
