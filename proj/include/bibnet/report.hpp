#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bibnet/graph.hpp"
#include "bibnet/normalize.hpp"
#include "bibnet/record.hpp"
#include "bibnet/text_kw.hpp"
#include "bibnet/wos_ingest.hpp"

namespace bibnet {

/// Graphs above this size are analysed with source sampling unless a sample
/// size is given explicitly.
inline constexpr std::size_t kAutoSampleNodeThreshold = 20000;
inline constexpr std::size_t kAutoSampleSources = 1000;

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::optional<ExportFormat> format;  // nullopt: detect per file
  std::filesystem::path out_dir = "out";
  std::size_t top_k = 10;
  double fuzzy_threshold = 0.8;
  std::optional<std::size_t> sample;         // traversal sources
  std::optional<std::size_t> dedup_sample;   // names compared by dedup-authors
  bool dedup_buckets = false;
  std::uint64_t seed = 42;
  std::size_t keywords_n = 100;
  std::optional<std::filesystem::path> stopwords_path;
  std::optional<std::filesystem::path> rules_path;
  bool centrality_whole_graph = false;
  bool closeness_literal = false;

  /// Applies keys from a JSON config file onto this config. Unknown keys and
  /// mistyped values throw ConfigError.
  void merge_file(const std::filesystem::path& path);

  RuleTables rules() const;
  StopwordSet stopwords() const;
  /// Explicit sample, or the automatic default for large graphs.
  std::optional<std::size_t> sample_for(std::size_t node_count) const;
};

struct ParseSummary {
  std::size_t files = 0;
  std::size_t records_read = 0;
  std::size_t skipped = 0;
  std::size_t duplicates_removed = 0;
  std::size_t corpus_size = 0;
  std::size_t dated_size = 0;
  std::size_t empty_institution_segments = 0;
  std::vector<std::string> warnings;  // "file:line: message"
};

/// Reads every input, merges, and writes corpus.jsonl and
/// parse_summary.json to the output directory.
ParseSummary cmd_parse(const RunConfig& config);

/// Loads a corpus.jsonl file. Throws InputError when unreadable.
Corpus load_corpus(const std::filesystem::path& path, const RuleTables& rules);

/// Writes the descriptive tables under <out>/stats/.
void cmd_stats(const Corpus& corpus, const RunConfig& config);

struct NetworkSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> sample;
};

/// Builds one graph and writes exports and analytics under
/// <out>/network/<kind>/. Analytics that the graph cannot support are written
/// with "status": "degenerate" instead of failing the command.
NetworkSummary cmd_network(const Corpus& corpus, GraphKind kind, const RunConfig& config);

/// Writes keyword_frequencies.{csv,json} under <out>/keywords/.
void cmd_keywords(const Corpus& corpus, const RunConfig& config);

/// Writes suspect_authors.csv under <out>/dedup/. Returns the pair count.
std::size_t cmd_dedup_authors(const Corpus& corpus, const RunConfig& config);

}  // namespace bibnet
