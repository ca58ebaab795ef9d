#include "bibnet/report.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bibnet/corpus_io.hpp"
#include "bibnet/dedup.hpp"
#include "bibnet/error.hpp"
#include "bibnet/graph_stats.hpp"
#include "bibnet/metrics.hpp"
#include "bibnet/strings.hpp"

namespace bibnet {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

/// Writes report files under one directory; every file carries the run seed
/// in its header (a '#' comment line for CSV, a "meta" object for JSON).
class ReportDir {
 public:
  ReportDir(fs::path dir, std::uint64_t seed) : dir_(std::move(dir)), seed_(seed) {
    fs::create_directories(dir_);
  }

  void write_raw(const std::string& name, const std::string& content) const {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + (dir_ / name).string());
    out << content;
  }

  void write_json(const std::string& name, ojson body) const {
    ojson doc;
    doc["meta"] = meta(name);
    for (auto& [k, v] : body.items()) doc[k] = std::move(v);
    write_raw(name + ".json", doc.dump(2) + "\n");
  }

  void write_csv(const std::string& name, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) const {
    std::ostringstream out;
    out << comment(name);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << text::csv_cell(header[i]);
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << text::csv_cell(row[i]);
      out << '\n';
    }
    write_raw(name + ".csv", out.str());
  }

  std::string comment(const std::string& table) const {
    return "# bibnet table=" + table + " seed=" + std::to_string(seed_) + "\n";
  }

  ojson meta(const std::string& table) const {
    return {{"tool", "bibnet"}, {"table", table}, {"seed", seed_}};
  }

 private:
  fs::path dir_;
  std::uint64_t seed_;
};

ojson real(double v) { return std::isfinite(v) ? ojson(text::round_sig6(v)) : ojson(nullptr); }
ojson real(const std::optional<double>& v) { return v ? real(*v) : ojson(nullptr); }
std::string cell(double v) { return text::format_sig6(v); }
std::string cell(const std::optional<double>& v) { return v ? cell(*v) : std::string{}; }

/// Runs one table, tagging analysis failures with the table name.
void table(const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const DegenerateError& e) {
    throw DegenerateError("table " + name + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DegenerateError("table " + name + ": " + e.what());
  }
}

void ranked_table(const ReportDir& dir, const std::string& name, const std::string& key_name,
                  const std::vector<RankedEntry>& rows) {
  std::vector<std::vector<std::string>> csv;
  ojson json = ojson::array();
  for (const auto& r : rows) {
    csv.push_back({r.key, std::to_string(r.count)});
    json.push_back({{key_name, r.key}, {"count", r.count}});
  }
  dir.write_csv(name, {key_name, "count"}, csv);
  dir.write_json(name, {{"rows", json}});
}

std::vector<RankedEntry> count_all(const Corpus& corpus, std::size_t k,
                                   const std::function<std::vector<std::string>(const BiblioRecord&)>& values) {
  std::map<std::string, std::int64_t> counts;
  for (const auto& r : corpus.records()) {
    std::set<std::string> distinct;
    for (auto& v : values(r)) {
      if (!v.empty()) distinct.insert(std::move(v));
    }
    for (const auto& v : distinct) ++counts[v];
  }
  if (counts.empty()) return {};
  return top_k(counts, k);
}

void stats_with_histogram(const ReportDir& dir, const std::string& name, const std::string& value_name,
                          const std::vector<double>& values) {
  auto d = descriptive_stats(values);
  std::map<double, std::int64_t> hist;
  for (double v : values) ++hist[v];
  std::vector<std::vector<std::string>> csv;
  for (const auto& [v, c] : hist) csv.push_back({cell(v), std::to_string(c)});
  dir.write_csv(name + "_histogram", {value_name, "count"}, csv);
  dir.write_json(name, {{"n", values.size()},
                        {"min", real(d.min)},
                        {"max", real(d.max)},
                        {"mean", real(d.mean)},
                        {"median", real(d.median)},
                        {"mode", real(d.mode)}});
}

void monthly_table(const ReportDir& dir, const std::string& name, const std::vector<MonthlySeries>& series) {
  std::vector<std::vector<std::string>> csv;
  ojson json = ojson::array();
  for (const auto& s : series) {
    ojson points = ojson::object();
    for (const auto& [ym, c] : s.points) {
      csv.push_back({s.key, ym.to_string(), std::to_string(c)});
      points[ym.to_string()] = c;
    }
    json.push_back({{"key", s.key}, {"points", points}});
  }
  dir.write_csv(name, {"key", "month", "count"}, csv);
  dir.write_json(name, {{"series", json}});
}

template <typename F>
std::optional<double> try_ratio(F&& f) {
  try {
    return f();
  } catch (const DegenerateError&) {
    return std::nullopt;
  }
}

std::string hash_degrees(std::vector<std::uint64_t> degrees) {
  std::sort(degrees.begin(), degrees.end());
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (auto d : degrees) {
    for (int b = 0; b < 8; ++b) {
      h ^= (d >> (8 * b)) & 0xFF;
      h *= 0x100000001b3ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ojson degenerate(const std::exception& e) { return {{"status", "degenerate"}, {"reason", e.what()}}; }

fs::path resolve_out(const RunConfig& config, const char* sub) { return config.out_dir / sub; }

}  // namespace

void RunConfig::merge_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid config file " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  const auto base = path.parent_path();
  auto rel = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "format") {
        auto f = v.get<std::string>();
        if (f == "tagged") format = ExportFormat::tagged;
        else if (f == "tab") format = ExportFormat::tab_delimited;
        else if (f == "auto") format.reset();
        else throw ConfigError("unknown format: " + f);
      } else if (key == "out") {
        out_dir = rel(v.get<std::string>());
      } else if (key == "top_k") {
        top_k = v.get<std::size_t>();
      } else if (key == "fuzzy_threshold") {
        fuzzy_threshold = v.get<double>();
      } else if (key == "sample") {
        sample = v.is_null() ? std::nullopt : std::optional<std::size_t>(v.get<std::size_t>());
      } else if (key == "dedup_sample") {
        dedup_sample = v.is_null() ? std::nullopt : std::optional<std::size_t>(v.get<std::size_t>());
      } else if (key == "dedup_buckets") {
        dedup_buckets = v.get<bool>();
      } else if (key == "seed") {
        seed = v.get<std::uint64_t>();
      } else if (key == "keywords_n") {
        keywords_n = v.get<std::size_t>();
      } else if (key == "stopwords") {
        stopwords_path = rel(v.get<std::string>());
      } else if (key == "rules") {
        rules_path = rel(v.get<std::string>());
      } else if (key == "centrality_whole_graph") {
        centrality_whole_graph = v.get<bool>();
      } else if (key == "closeness_literal") {
        closeness_literal = v.get<bool>();
      } else {
        throw ConfigError("unknown config key: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  if (top_k < 1) throw ConfigError("top_k must be at least 1");
  if (keywords_n < 1) throw ConfigError("keywords_n must be at least 1");
  if (!(fuzzy_threshold > 0 && fuzzy_threshold <= 1)) throw ConfigError("fuzzy_threshold must lie in (0, 1]");
  if (sample && *sample < 1) throw ConfigError("sample must be at least 1");
}

RuleTables RunConfig::rules() const { return rules_path ? RuleTables::load(*rules_path) : RuleTables::defaults(); }

StopwordSet RunConfig::stopwords() const {
  return stopwords_path ? StopwordSet::load(*stopwords_path) : StopwordSet::english();
}

std::optional<std::size_t> RunConfig::sample_for(std::size_t node_count) const {
  if (sample) return sample;
  if (node_count > kAutoSampleNodeThreshold) return kAutoSampleSources;
  return std::nullopt;
}

ParseSummary cmd_parse(const RunConfig& config) {
  const auto rules = config.rules();
  ParseSummary summary;
  std::vector<std::vector<BiblioRecord>> parts;
  for (const auto& path : config.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    auto format = config.format ? *config.format : detect_format(in);
    ParseResult result;
    try {
      result = parse_export(in, format);
    } catch (const FormatError& e) {
      throw InputError(path.string() + ":" + std::to_string(e.line()) + ": " +
                       std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
    ++summary.files;
    summary.records_read += result.records.size() + result.skipped;
    summary.skipped += result.skipped;
    for (const auto& w : result.warnings) {
      summary.warnings.push_back(path.string() + ":" + std::to_string(w.line) + ": " + w.message);
    }
    parts.push_back(std::move(result.records));
  }
  auto merged = merge_corpora(std::move(parts), rules);
  summary.duplicates_removed = merged.duplicates_removed;
  summary.corpus_size = merged.corpus.size();
  summary.dated_size = merged.corpus.dated_view().size();
  for (std::size_t i = 0; i < merged.corpus.size(); ++i) {
    const auto& r = merged.corpus[i];
    const auto empty = count_empty_institution_segments(r.addresses);
    if (empty == 0) continue;
    summary.empty_institution_segments += empty;
    summary.warnings.push_back("record " + std::to_string(i + 1) + " (" + r.accession_id.value_or(r.title) + "): " +
                               std::to_string(empty) + " address segment(s) without an institution");
  }

  ReportDir dir(config.out_dir, config.seed);
  std::ostringstream corpus_text;
  write_corpus_jsonl(corpus_text, merged.corpus);
  dir.write_raw("corpus.jsonl", corpus_text.str());
  ojson inputs = ojson::array();
  for (const auto& p : config.inputs) inputs.push_back(p.string());
  dir.write_json("parse_summary", {{"inputs", inputs},
                                   {"files", summary.files},
                                   {"records_read", summary.records_read},
                                   {"skipped", summary.skipped},
                                   {"duplicates_removed", summary.duplicates_removed},
                                   {"corpus_size", summary.corpus_size},
                                   {"dated_size", summary.dated_size},
                                   {"empty_institution_segments", summary.empty_institution_segments},
                                   {"warnings", summary.warnings}});
  return summary;
}

Corpus load_corpus(const fs::path& path, const RuleTables& rules) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read corpus " + path.string());
  try {
    return read_corpus_jsonl(in, rules);
  } catch (const FormatError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void cmd_stats(const Corpus& corpus, const RunConfig& config) {
  const auto rules = config.rules();
  const auto k = config.top_k;
  ReportDir dir(resolve_out(config, "stats"), config.seed);
  const auto all = std::numeric_limits<std::size_t>::max();

  table("publication_types", [&] {
    ranked_table(dir, "publication_types", "type", count_all(corpus, all, [](const BiblioRecord& r) {
      return std::vector<std::string>{std::string(1, to_code(r.publication_type))};
    }));
  });
  table("document_types", [&] {
    ranked_table(dir, "document_types", "document_type", count_all(corpus, all, [](const BiblioRecord& r) {
      return std::vector<std::string>{primary_document_type(r.document_type)};
    }));
  });
  table("languages", [&] {
    ranked_table(dir, "languages", "language", count_all(corpus, all, [](const BiblioRecord& r) {
      return std::vector<std::string>{r.language};
    }));
  });
  table("sources", [&] {
    ranked_table(dir, "sources", "source", count_all(corpus, k, [](const BiblioRecord& r) {
      return std::vector<std::string>{r.source_abbrev};
    }));
  });
  table("countries", [&] {
    ranked_table(dir, "countries", "country", count_all(corpus, k, [&](const BiblioRecord& r) {
      return extract_countries(r.addresses, ExtractionMode::unique, rules);
    }));
  });
  table("institutions", [&] {
    ranked_table(dir, "institutions", "institution", count_all(corpus, k, [](const BiblioRecord& r) {
      return extract_institutions(r.addresses, ExtractionMode::unique);
    }));
  });
  table("research_areas", [&] {
    ranked_table(dir, "research_areas", "research_area", count_all(corpus, k, [](const BiblioRecord& r) {
      return r.research_areas;
    }));
  });
  table("author_keywords", [&] {
    ranked_table(dir, "author_keywords", "keyword", count_all(corpus, k, [](const BiblioRecord& r) {
      std::vector<std::string> out;
      for (const auto& kw : r.author_keywords) out.push_back(text::to_lower_ascii(kw));
      return out;
    }));
  });
  table("pages", [&] {
    std::vector<double> pages;
    for (const auto& r : corpus.records()) {
      if (r.page_count) pages.push_back(*r.page_count);
    }
    stats_with_histogram(dir, "pages", "pages", pages);
  });
  table("authors_per_paper", [&] {
    std::vector<double> counts;
    for (const auto& r : corpus.records()) {
      if (!r.author_full_names.empty()) counts.push_back(static_cast<double>(r.author_full_names.size()));
    }
    stats_with_histogram(dir, "authors_per_paper", "authors", counts);
  });
  table("most_cited", [&] {
    std::vector<std::vector<std::string>> csv;
    ojson json = ojson::array();
    for (const auto& row : most_cited(corpus, k)) {
      std::string areas;
      for (std::size_t i = 0; i < row.research_areas.size(); ++i) areas += (i ? "; " : "") + row.research_areas[i];
      csv.push_back({row.title, row.first_author_et_al, std::to_string(row.times_cited), areas});
      json.push_back({{"title", row.title},
                      {"first_author_et_al", row.first_author_et_al},
                      {"times_cited", row.times_cited},
                      {"research_areas", row.research_areas}});
    }
    dir.write_csv("most_cited", {"title", "first_author_et_al", "times_cited", "research_areas"}, csv);
    dir.write_json("most_cited", {{"rows", json}});
  });
  table("author_table", [&] {
    std::vector<std::vector<std::string>> csv;
    ojson json = ojson::array();
    for (const auto& row : author_table(corpus, k)) {
      csv.push_back({row.name, std::to_string(row.total_cited), std::to_string(row.papers),
                     cell(row.cited_per_paper), std::to_string(row.h), std::to_string(row.g)});
      json.push_back({{"name", row.name},
                      {"total_cited", row.total_cited},
                      {"papers", row.papers},
                      {"cited_per_paper", real(row.cited_per_paper)},
                      {"h_index", row.h},
                      {"g_index", row.g}});
    }
    dir.write_csv("author_table", {"name", "total_cited", "papers", "cited_per_paper", "h_index", "g_index"}, csv);
    dir.write_json("author_table", {{"rows", json}, {"note", "papers without a times-cited value count as 0"}});
  });
  table("monthly_all", [&] { monthly_table(dir, "monthly_all", monthly_counts(corpus, GroupBy::all)); });
  table("monthly_country", [&] {
    monthly_table(dir, "monthly_country", monthly_counts(corpus, GroupBy::country, k, rules));
  });
  table("monthly_source", [&] { monthly_table(dir, "monthly_source", monthly_counts(corpus, GroupBy::source, k)); });
  table("monthly_research_area", [&] {
    monthly_table(dir, "monthly_research_area", monthly_counts(corpus, GroupBy::research_area, k));
  });
  table("collaboration", [&] {
    const double doc = degree_of_collaboration(corpus);
    auto intl = try_ratio([&] { return international_collab_ratio(corpus, rules); });
    auto multi = try_ratio([&] { return multidisciplinary_ratio(corpus); });
    std::map<YearMonth, std::vector<std::size_t>> by_month;
    for (auto i : corpus.dated_view()) by_month[*corpus.month_of(i)].push_back(i);
    std::vector<std::vector<std::string>> csv;
    ojson monthly = ojson::array();
    for (const auto& [ym, idx] : by_month) {
      auto m_doc = try_ratio([&] { return degree_of_collaboration(corpus, idx); });
      auto m_intl = try_ratio([&] { return international_collab_ratio(corpus, idx, rules); });
      auto m_multi = try_ratio([&] { return multidisciplinary_ratio(corpus, idx); });
      csv.push_back({ym.to_string(), std::to_string(idx.size()), cell(m_doc), cell(m_intl), cell(m_multi)});
      monthly.push_back({{"month", ym.to_string()},
                         {"papers", idx.size()},
                         {"degree_of_collaboration", real(m_doc)},
                         {"international_collab_ratio", real(m_intl)},
                         {"multidisciplinary_ratio", real(m_multi)}});
    }
    dir.write_csv("collaboration_monthly",
                  {"month", "papers", "degree_of_collaboration", "international_collab_ratio",
                   "multidisciplinary_ratio"},
                  csv);
    dir.write_json("collaboration", {{"degree_of_collaboration", real(doc)},
                                     {"international_collab_ratio", real(intl)},
                                     {"multidisciplinary_ratio", real(multi)},
                                     {"monthly", monthly}});
  });
  table("correlation_matrix", [&] {
    auto m = correlation_matrix(corpus, rules);
    std::vector<std::string> header{"variable"};
    header.insert(header.end(), m.variables.begin(), m.variables.end());
    std::vector<std::vector<std::string>> csv;
    ojson entries = ojson::array();
    for (std::size_t i = 0; i < m.variables.size(); ++i) {
      std::vector<std::string> row{m.variables[i]};
      ojson jrow = ojson::array();
      for (std::size_t j = 0; j < m.variables.size(); ++j) {
        row.push_back(cell(m.entries[i][j]));
        jrow.push_back(real(m.entries[i][j]));
      }
      csv.push_back(std::move(row));
      entries.push_back(std::move(jrow));
    }
    dir.write_csv("correlation_matrix", header, csv);
    dir.write_json("correlation_matrix",
                   {{"variables", m.variables}, {"rows_used", m.rows_used}, {"entries", entries}});
  });
}

NetworkSummary cmd_network(const Corpus& corpus, GraphKind kind, const RunConfig& config) {
  const auto rules = config.rules();
  ReportDir dir(resolve_out(config, "network") / std::string(to_string(kind)), config.seed);
  auto g = build_graph(corpus, kind, rules);
  NetworkSummary summary{g.node_count(), g.edge_count(), config.sample_for(g.node_count())};
  const Sampling sampling{summary.sample, config.seed};
  const ojson sample_json = summary.sample ? ojson(*summary.sample) : ojson(nullptr);

  {
    std::ostringstream s;
    write_graphml(s, g);
    dir.write_raw("graph.graphml", s.str());
  }
  {
    std::ostringstream s;
    write_dot(s, g);
    dir.write_raw("graph.dot", s.str());
  }
  {
    std::ostringstream s;
    s << dir.comment("edges");
    write_edge_list_csv(s, g);
    dir.write_raw("edges.csv", s.str());
  }

  auto facts = graph_facts(g);
  dir.write_json("facts", {{"kind", to_string(kind)},
                           {"node_count", facts.node_count},
                           {"edge_count", facts.edge_count},
                           {"self_loop_count", facts.self_loop_count},
                           {"isolated_count", facts.isolated_count},
                           {"component_count", facts.component_count},
                           {"largest_component", facts.component_sizes.empty() ? 0 : facts.component_sizes[0]},
                           {"component_sizes", facts.component_sizes}});

  {
    std::vector<std::vector<std::string>> csv;
    ojson json = ojson::array();
    if (g.edge_count() > 0) {
      for (const auto& e : top_weighted_edges(g, config.top_k, true)) {
        csv.push_back({e.a, e.b, std::to_string(e.weight)});
        json.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
      }
    }
    dir.write_csv("top_edges", {"label_a", "label_b", "weight"}, csv);
    dir.write_json("top_edges", {{"include_self_loops", true}, {"rows", json}});
  }

  {
    auto degrees = degree_sequence(g);
    std::map<std::uint64_t, std::int64_t> hist;
    for (auto d : degrees) ++hist[d];
    std::vector<std::vector<std::string>> csv;
    for (const auto& [d, c] : hist) csv.push_back({std::to_string(d), std::to_string(c)});
    dir.write_csv("degree_histogram", {"degree", "count"}, csv);

    std::vector<std::uint64_t> positive;
    for (auto d : degrees) {
      if (d > 0) positive.push_back(d);
    }
    try {
      auto fit = fit_power_law(positive);
      dir.write_json("power_law", {{"status", "ok"},
                                   {"gamma", real(fit.gamma)},
                                   {"xmin", fit.xmin},
                                   {"ks", real(fit.ks_statistic)},
                                   {"n_tail", fit.n_tail},
                                   {"n_samples", fit.n_samples},
                                   {"sampled_degrees_hash", hash_degrees(positive)}});
    } catch (const DegenerateError& e) {
      auto body = degenerate(e);
      body["sampled_degrees_hash"] = hash_degrees(positive);
      dir.write_json("power_law", body);
    }
  }

  try {
    auto t = centrality_table(g, sampling, config.centrality_whole_graph);
    std::vector<std::string> header{"label", "degree", "betweenness", "closeness"};
    if (config.closeness_literal) header.push_back("closeness_literal");
    std::vector<std::vector<std::string>> csv;
    for (const auto& r : t.rows) {
      std::vector<std::string> row{r.label, text::format_fixed6(r.degree), text::format_fixed6(r.betweenness),
                                   text::format_fixed6(r.closeness)};
      if (config.closeness_literal) row.push_back(text::format_fixed6(r.closeness_literal));
      csv.push_back(std::move(row));
    }
    dir.write_csv("centrality", header, csv);
    dir.write_json("centrality_info", {{"status", "ok"},
                                       {"analyzed", config.centrality_whole_graph ? "whole_graph" : "largest_component"},
                                       {"analyzed_nodes", t.analyzed_nodes},
                                       {"sampled", t.sampled},
                                       {"sample_sources", sample_json}});
  } catch (const DegenerateError& e) {
    dir.write_json("centrality_info", degenerate(e));
  }

  try {
    ojson overall = real(degree_assortativity(g).r);
    std::vector<std::vector<std::string>> csv;
    ojson comps = ojson::array();
    ojson plotted = ojson::array();
    std::size_t rank = 0;
    for (const auto& a : per_component_assortativity(g)) {
      ++rank;
      csv.push_back({std::to_string(rank), std::to_string(a.component_size), cell(a.r), a.r ? "1" : "0"});
      comps.push_back({{"component_size", a.component_size}, {"r", real(a.r)}});
      if (a.r) plotted.push_back({{"component_size", a.component_size}, {"r", real(a.r)}});
    }
    dir.write_csv("assortativity", {"rank", "component_size", "r", "defined"}, csv);
    dir.write_json("assortativity", {{"status", "ok"}, {"overall", overall}, {"components", comps}, {"plotted", plotted}});
  } catch (const DegenerateError& e) {
    dir.write_json("assortativity", degenerate(e));
  }

  try {
    auto sw = small_world_check(g, sampling);
    dir.write_json("small_world", {{"status", "ok"},
                                   {"avg_shortest_path", real(sw.avg_shortest_path)},
                                   {"component_size", sw.component_size},
                                   {"ln_node_count", real(sw.ln_node_count)},
                                   {"avg_clustering", real(sw.avg_clustering)},
                                   {"sampled", sw.sampled},
                                   {"sample_sources", sample_json},
                                   {"small_world_consistent", sw.small_world_consistent},
                                   {"verdict", sw.verdict}});
  } catch (const DegenerateError& e) {
    dir.write_json("small_world", degenerate(e));
  }
  return summary;
}

void cmd_keywords(const Corpus& corpus, const RunConfig& config) {
  ReportDir dir(resolve_out(config, "keywords"), config.seed);
  auto freqs = keyword_frequencies(corpus, config.stopwords(), config.keywords_n);
  std::vector<std::vector<std::string>> csv;
  ojson words = ojson::array();
  for (const auto& f : freqs) {
    csv.push_back({f.key, std::to_string(f.count)});
    words.push_back(ojson::array({f.key, f.count}));
  }
  dir.write_csv("keyword_frequencies", {"token", "count"}, csv);
  // Plain [[token, count], ...] so word-cloud renderers can read it directly.
  dir.write_raw("keyword_frequencies.json", words.dump() + "\n");
}

std::size_t cmd_dedup_authors(const Corpus& corpus, const RunConfig& config) {
  ReportDir dir(resolve_out(config, "dedup"), config.seed);
  std::set<std::string> unique;
  for (const auto& r : corpus.records()) unique.insert(r.author_full_names.begin(), r.author_full_names.end());
  std::vector<std::string> names(unique.begin(), unique.end());
  if (config.dedup_sample) names = sample_names(names, *config.dedup_sample, config.seed);
  auto pairs = find_suspect_pairs(names, {config.fuzzy_threshold, config.dedup_buckets});
  std::ostringstream s;
  s << dir.comment("suspect_authors");
  write_suspect_pairs_csv(s, pairs);
  dir.write_raw("suspect_authors.csv", s.str());
  return pairs.size();
}

}  // namespace bibnet
