// bibnet: bibliographic export analysis from the command line.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "bibnet/error.hpp"
#include "bibnet/report.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bibliographic export analysis: parse, stats, networks, keywords, author dedup"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t top_k = 0;
  std::size_t sample = 0;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_dir, "Output directory (env BIBNET_OUT, default ./out)");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed for sampling (default 42)");
  auto* top_k_opt = app.add_option("--top-k", top_k, "Rows in ranking tables (default 10)")->check(CLI::PositiveNumber);
  auto* sample_opt = app.add_option("--sample", sample, "Source sample size for traversal statistics")
                         ->check(CLI::PositiveNumber);

  auto* parse = app.add_subcommand("parse", "Parse export files into corpus.jsonl");
  std::vector<std::string> inputs;
  std::string format = "auto";
  parse->add_option("inputs", inputs, "Export files")->required();
  parse->add_option("--format", format, "tagged, tab or auto")->check(CLI::IsMember({"tagged", "tab", "auto"}));

  std::string corpus_path;
  auto* stats = app.add_subcommand("stats", "Descriptive tables, indices, series and correlations");
  stats->add_option("corpus", corpus_path, "corpus.jsonl")->required();

  auto* network = app.add_subcommand("network", "Build one collaboration or co-occurrence graph");
  std::string kind_name;
  bool whole_graph = false, literal = false;
  network->add_option("corpus", corpus_path, "corpus.jsonl")->required();
  network->add_option("--kind", kind_name, "coauthor|country|institution|research-area|keyword")
      ->required()
      ->check(CLI::IsMember({"coauthor", "country", "institution", "research-area", "keyword"}));
  network->add_flag("--whole-graph", whole_graph, "Centrality over the whole graph, not the largest component");
  network->add_flag("--closeness-literal", literal, "Also report closeness as N / farness");

  auto* keywords = app.add_subcommand("keywords", "Title and abstract keyword frequencies");
  std::size_t keywords_n = 0;
  keywords->add_option("corpus", corpus_path, "corpus.jsonl")->required();
  auto* n_opt = keywords->add_option("-n", keywords_n, "Number of keywords (default 100)")->check(CLI::PositiveNumber);

  auto* dedup = app.add_subcommand("dedup-authors", "Report near-duplicate author names");
  double threshold = 0;
  std::size_t names_sample = 0;
  bool buckets = false;
  dedup->add_option("corpus", corpus_path, "corpus.jsonl")->required();
  auto* threshold_opt = dedup->add_option("--threshold", threshold, "Similarity ratio threshold (default 0.8)")
                            ->check(CLI::Range(0.0, 1.0));
  auto* names_opt = dedup->add_option("--names-sample", names_sample, "Compare a seeded sample of names")
                        ->check(CLI::PositiveNumber);
  dedup->add_flag("--bucket-first-letter", buckets, "Only compare names sharing a first letter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    bibnet::RunConfig config;
    if (const char* env = std::getenv("BIBNET_OUT"); env && *env) config.out_dir = env;
    if (!config_path.empty()) config.merge_file(config_path);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (*seed_opt) config.seed = seed;
    if (*top_k_opt) config.top_k = top_k;
    if (*sample_opt) config.sample = sample;

    if (*parse) {
      for (const auto& i : inputs) config.inputs.emplace_back(i);
      if (format == "tagged") config.format = bibnet::ExportFormat::tagged;
      if (format == "tab") config.format = bibnet::ExportFormat::tab_delimited;
      auto s = bibnet::cmd_parse(config);
      for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
      std::cout << "records read: " << s.records_read << ", skipped: " << s.skipped
                << ", duplicates removed: " << s.duplicates_removed << ", corpus: " << s.corpus_size
                << ", dated: " << s.dated_size << '\n';
      return 0;
    }

    auto corpus = bibnet::load_corpus(corpus_path, config.rules());
    if (*stats) {
      bibnet::cmd_stats(corpus, config);
    } else if (*network) {
      if (whole_graph) config.centrality_whole_graph = true;
      if (literal) config.closeness_literal = true;
      auto s = bibnet::cmd_network(corpus, *bibnet::parse_graph_kind(kind_name), config);
      std::cout << kind_name << ": " << s.nodes << " nodes, " << s.edges << " edges";
      if (s.sample) std::cout << " (sampled: " << *s.sample << " sources)";
      std::cout << '\n';
    } else if (*keywords) {
      if (*n_opt) config.keywords_n = keywords_n;
      bibnet::cmd_keywords(corpus, config);
    } else if (*dedup) {
      if (*threshold_opt) config.fuzzy_threshold = threshold;
      if (*names_opt) config.dedup_sample = names_sample;
      if (buckets) config.dedup_buckets = true;
      std::cout << bibnet::cmd_dedup_authors(corpus, config) << " suspect pairs\n";
    }
    return 0;
  } catch (const bibnet::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const bibnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const bibnet::DegenerateError& e) {
    std::cerr << "analysis error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
