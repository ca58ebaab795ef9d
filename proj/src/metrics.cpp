#include "bibnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "bibnet/error.hpp"

namespace bibnet {

namespace {

std::vector<std::int64_t> sorted_desc(std::span<const std::int64_t> v) {
  std::vector<std::int64_t> s(v.begin(), v.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

template <typename Pred, typename Qualifies>
double ratio_over(const Corpus& corpus, std::span<const std::size_t> subset, Qualifies qualifies,
                  Pred numerator, const char* what) {
  std::size_t eligible = 0;
  std::size_t hits = 0;
  for (auto i : subset) {
    const auto& r = corpus[i];
    if (!qualifies(r)) continue;
    ++eligible;
    if (numerator(r)) ++hits;
  }
  if (eligible == 0) throw DegenerateError(std::string("no records with ") + what);
  return static_cast<double>(hits) / static_cast<double>(eligible);
}

std::vector<std::size_t> all_indices(const Corpus& corpus) {
  std::vector<std::size_t> idx(corpus.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return idx;
}

std::set<std::string> unique_countries(const BiblioRecord& r, const RuleTables& rules) {
  auto list = extract_countries(r.addresses, ExtractionMode::unique, rules);
  return {list.begin(), list.end()};
}

}  // namespace

int h_index(std::span<const std::int64_t> citations) {
  auto s = sorted_desc(citations);
  int h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= static_cast<std::int64_t>(i + 1)) h = static_cast<int>(i + 1);
  }
  return h;
}

int g_index(std::span<const std::int64_t> citations) {
  auto s = sorted_desc(citations);
  int g = 0;
  std::int64_t prefix = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    prefix += s[i];
    auto n = static_cast<std::int64_t>(i + 1);
    if (n * n <= prefix) g = static_cast<int>(n);
  }
  return g;
}

std::vector<AuthorRow> author_table(const Corpus& corpus, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::map<std::string, std::vector<std::int64_t>> cites;
  for (const auto& r : corpus.records()) {
    for (const auto& name : r.author_full_names) cites[name].push_back(r.times_cited.value_or(0));
  }
  std::vector<AuthorRow> rows;
  rows.reserve(cites.size());
  for (const auto& [name, v] : cites) {
    AuthorRow row;
    row.name = name;
    for (auto c : v) row.total_cited += c;
    row.papers = static_cast<int>(v.size());
    row.cited_per_paper = static_cast<double>(row.total_cited) / row.papers;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const AuthorRow& a, const AuthorRow& b) {
    if (a.total_cited != b.total_cited) return a.total_cited > b.total_cited;
    return a.name < b.name;
  });
  if (rows.size() > k) rows.resize(k);
  for (auto& row : rows) {
    const auto& v = cites.at(row.name);
    row.h = h_index(v);
    row.g = g_index(v);
  }
  return rows;
}

double degree_of_collaboration(const Corpus& corpus) {
  return degree_of_collaboration(corpus, all_indices(corpus));
}

double degree_of_collaboration(const Corpus& corpus, std::span<const std::size_t> subset) {
  return ratio_over(
      corpus, subset, [](const BiblioRecord& r) { return !r.author_full_names.empty(); },
      [](const BiblioRecord& r) { return r.author_full_names.size() >= 2; }, "authors");
}

double international_collab_ratio(const Corpus& corpus, const RuleTables& rules) {
  return international_collab_ratio(corpus, all_indices(corpus), rules);
}

double international_collab_ratio(const Corpus& corpus, std::span<const std::size_t> subset,
                                  const RuleTables& rules) {
  std::vector<std::size_t> sizes(corpus.size(), 0);
  for (auto i : subset) sizes[i] = unique_countries(corpus[i], rules).size();
  std::size_t eligible = 0;
  std::size_t hits = 0;
  for (auto i : subset) {
    if (sizes[i] == 0) continue;
    ++eligible;
    if (sizes[i] >= 2) ++hits;
  }
  if (eligible == 0) throw DegenerateError("no records with countries");
  return static_cast<double>(hits) / static_cast<double>(eligible);
}

double multidisciplinary_ratio(const Corpus& corpus) {
  return multidisciplinary_ratio(corpus, all_indices(corpus));
}

double multidisciplinary_ratio(const Corpus& corpus, std::span<const std::size_t> subset) {
  auto distinct = [](const BiblioRecord& r) {
    return std::set<std::string>(r.research_areas.begin(), r.research_areas.end()).size();
  };
  return ratio_over(
      corpus, subset, [&](const BiblioRecord& r) { return distinct(r) >= 1; },
      [&](const BiblioRecord& r) { return distinct(r) >= 2; }, "research areas");
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least two observations");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v[0]; });
  };
  if (constant(x) || constant(y)) return std::nullopt;
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  double r = (sxy / n) / std::sqrt((sxx / n) * (syy / n));
  return std::clamp(r, -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(const Corpus& corpus, const RuleTables& rules) {
  constexpr std::size_t kVars = kCorrelationVariables.size();
  std::vector<std::vector<double>> columns(kVars);
  for (const auto& r : corpus.records()) {
    auto countries = unique_countries(r, rules).size();
    std::set<std::string> areas(r.research_areas.begin(), r.research_areas.end());
    if (r.author_full_names.empty() || !r.cited_reference_count || !r.times_cited ||
        areas.empty() || countries == 0 || !r.page_count) {
      continue;
    }
    columns[0].push_back(static_cast<double>(r.author_full_names.size()));
    columns[1].push_back(*r.cited_reference_count);
    columns[2].push_back(*r.times_cited);
    columns[3].push_back(static_cast<double>(areas.size()));
    columns[4].push_back(static_cast<double>(countries));
    columns[5].push_back(*r.page_count);
  }
  CorrelationMatrix m;
  m.rows_used = columns[0].size();
  if (m.rows_used < 2) throw DegenerateError("correlation matrix needs at least two complete rows");
  m.variables.assign(kCorrelationVariables.begin(), kCorrelationVariables.end());
  m.entries.assign(kVars, std::vector<std::optional<double>>(kVars));
  for (std::size_t i = 0; i < kVars; ++i) {
    for (std::size_t j = i; j < kVars; ++j) {
      auto rho = pearson(columns[i], columns[j]);
      if (i == j && rho) rho = 1.0;
      m.entries[i][j] = rho;
      m.entries[j][i] = rho;
    }
  }
  return m;
}

std::vector<RankedEntry> top_k(const std::map<std::string, std::int64_t>& counts, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<RankedEntry> out;
  out.reserve(counts.size());
  for (const auto& [key, c] : counts) out.push_back({key, c});
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedEntry& a, const RankedEntry& b) { return a.count > b.count; });
  if (out.size() > k) out.resize(k);
  return out;
}

std::vector<MonthlySeries> monthly_counts(const Corpus& corpus, GroupBy group_by,
                                          std::optional<std::size_t> keys,
                                          const RuleTables& rules) {
  auto dated = corpus.dated_view();
  if (dated.empty()) throw DegenerateError("no records with a resolvable publication month");

  auto groups_of = [&](const BiblioRecord& r) -> std::set<std::string> {
    switch (group_by) {
      case GroupBy::all: return {"ALL"};
      case GroupBy::country: return unique_countries(r, rules);
      case GroupBy::source:
        if (r.source_abbrev.empty()) return {};
        return {r.source_abbrev};
      case GroupBy::research_area: return {r.research_areas.begin(), r.research_areas.end()};
    }
    return {};
  };

  YearMonth first = *corpus.month_of(dated.front());
  YearMonth last = first;
  std::map<std::string, std::map<YearMonth, std::int64_t>> per_group;
  std::map<std::string, std::int64_t> totals;
  for (auto i : dated) {
    auto ym = *corpus.month_of(i);
    first = std::min(first, ym);
    last = std::max(last, ym);
    for (const auto& g : groups_of(corpus[i])) {
      ++per_group[g][ym];
      ++totals[g];
    }
  }

  auto ranked = top_k(totals, keys.value_or(std::max<std::size_t>(totals.size(), 1)));
  std::vector<MonthlySeries> out;
  for (const auto& entry : ranked) {
    MonthlySeries s;
    s.key = entry.key;
    const auto& counts = per_group[entry.key];
    for (auto ym = first; ym <= last; ym = ym.next()) {
      auto it = counts.find(ym);
      s.points[ym] = it == counts.end() ? 0 : it->second;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MostCitedRow> most_cited(const Corpus& corpus, std::size_t k) {
  std::vector<MostCitedRow> rows;
  rows.reserve(corpus.size());
  for (const auto& r : corpus.records()) {
    MostCitedRow row;
    row.title = r.title;
    if (!r.author_full_names.empty()) {
      row.first_author_et_al = r.author_full_names.front();
      if (r.author_full_names.size() > 1) row.first_author_et_al += " et al.";
    }
    row.times_cited = r.times_cited.value_or(0);
    row.research_areas = r.research_areas;
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const MostCitedRow& a, const MostCitedRow& b) {
    if (a.times_cited != b.times_cited) return a.times_cited > b.times_cited;
    return a.title < b.title;
  });
  if (rows.size() > k) rows.resize(k);
  return rows;
}

DescriptiveStats descriptive_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("descriptive statistics of an empty list");
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  DescriptiveStats d;
  d.min = s.front();
  d.max = s.back();
  double sum = 0;
  for (double v : s) sum += v;
  d.mean = sum / static_cast<double>(s.size());
  auto mid = s.size() / 2;
  d.median = s.size() % 2 ? s[mid] : (s[mid - 1] + s[mid]) / 2.0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (j - i > best) {
      best = j - i;
      d.mode = s[i];
    }
    i = j;
  }
  return d;
}

}  // namespace bibnet
