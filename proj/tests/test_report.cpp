#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bibnet/error.hpp"
#include "bibnet/report.hpp"

using namespace bibnet;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("bibnet_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json read_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

int run(const std::string& args) {
  int status = std::system((std::string(BIBNET_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig fixture_config(const fs::path& out) {
  RunConfig c;
  c.inputs = {BIBNET_TEST_DATA "/fixture20.txt"};
  c.out_dir = out;
  return c;
}

}  // namespace

TEST_CASE("parse summary of the fixture") {
  auto out = scratch("parse");
  auto s = cmd_parse(fixture_config(out));
  CHECK(s.files == 1);
  CHECK(s.records_read == 20);
  CHECK(s.skipped == 1);
  CHECK(s.duplicates_removed == 1);
  CHECK(s.corpus_size == 18);
  CHECK(s.dated_size == 15);
  CHECK(s.empty_institution_segments == 0);
  auto j = read_json(out / "parse_summary.json");
  CHECK(j["meta"]["seed"] == 42);
  CHECK(j["corpus_size"] == 18);
  CHECK(fs::exists(out / "corpus.jsonl"));
}

TEST_CASE("empty institutions are flagged") {
  auto out = scratch("empty_inst");
  fs::create_directories(out);
  std::ofstream(out / "in.txt") << "PT J\nAF A, B\nTI T\nC1 [A, B], , Dept X, Rome, Italy.\nUT WOS:9\nER\n";
  RunConfig c;
  c.inputs = {out / "in.txt"};
  c.out_dir = out;
  auto s = cmd_parse(c);
  CHECK(s.empty_institution_segments == 1);
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("WOS:9") != std::string::npos);
}

TEST_CASE("stats outputs") {
  auto out = scratch("stats");
  auto config = fixture_config(out);
  cmd_parse(config);
  auto corpus = load_corpus(out / "corpus.jsonl", config.rules());
  cmd_stats(corpus, config);
  for (const char* name :
       {"publication_types", "document_types", "languages", "sources", "countries", "institutions",
        "research_areas", "author_keywords", "most_cited", "author_table", "monthly_all", "monthly_country",
        "monthly_source", "monthly_research_area", "correlation_matrix"}) {
    CHECK_MESSAGE(fs::exists(out / "stats" / (std::string(name) + ".csv")), name);
    CHECK_MESSAGE(fs::exists(out / "stats" / (std::string(name) + ".json")), name);
  }
  auto collab = read_json(out / "stats/collaboration.json");
  // 11 of 18 papers have two or more authors.
  CHECK(collab["degree_of_collaboration"].get<double>() == doctest::Approx(11.0 / 18).epsilon(1e-6));
  CHECK(collab["international_collab_ratio"].get<double>() == doctest::Approx(5.0 / 18).epsilon(1e-6));
  CHECK(collab["multidisciplinary_ratio"].get<double>() == doctest::Approx(7.0 / 18).epsilon(1e-6));
  auto authors = read_json(out / "stats/author_table.json")["rows"];
  CHECK(authors[0]["name"] == "Lee, Min");
  CHECK(authors[0]["total_cited"] == 155);
  CHECK(authors[1]["name"] == "Smith, John");
  CHECK(authors[1]["h_index"] == 4);
  auto countries = slurp(out / "stats/countries.csv");
  CHECK(countries.rfind("# bibnet table=countries seed=42\ncountry,count\nUSA,5\nUnited Kingdom,5\n", 0) == 0);
  auto monthly = read_json(out / "stats/monthly_all.json")["series"][0]["points"];
  CHECK(monthly.size() == 12);
  CHECK(monthly["2020-09"] == 2);
  CHECK(monthly["2020-04"] == 2);
  CHECK(monthly["2020-08"] == 1);
}

TEST_CASE("network outputs") {
  auto out = scratch("network");
  auto config = fixture_config(out);
  cmd_parse(config);
  auto corpus = load_corpus(out / "corpus.jsonl", config.rules());
  auto s = cmd_network(corpus, GraphKind::coauthor, config);
  CHECK(s.nodes == 21);
  CHECK(s.edges == 14);
  CHECK_FALSE(s.sample.has_value());
  auto facts = read_json(out / "network/coauthor/facts.json");
  CHECK(facts["isolated_count"] == 4);
  CHECK(facts["edge_count"] == 14);
  auto power = read_json(out / "network/coauthor/power_law.json");
  CHECK(power["status"] == "degenerate");
  for (const char* f : {"graph.graphml", "graph.dot", "edges.csv", "top_edges.csv", "centrality.csv",
                        "assortativity.json", "degree_histogram.csv", "small_world.json"}) {
    CHECK_MESSAGE(fs::exists(out / "network/coauthor" / f), f);
  }
  cmd_network(corpus, GraphKind::country, config);
  auto top = slurp(out / "network/country/top_edges.csv");
  CHECK(top.find("USA,United Kingdom,4\n") != std::string::npos);
}

TEST_CASE("config file") {
  auto dir = scratch("config");
  fs::create_directories(dir);
  std::ofstream(dir / "run.json") << R"({"top_k": 3, "seed": 7, "out": "results", "rules": "rules.json"})";
  std::ofstream(dir / "rules.json") << R"({"country_aliases": {"Italia": "Italy"}})";
  RunConfig c;
  c.merge_file(dir / "run.json");
  CHECK(c.top_k == 3);
  CHECK(c.seed == 7);
  CHECK(c.out_dir == dir / "results");
  CHECK(c.rules().country_aliases.count("italia") == 1);
  std::ofstream(dir / "bad.json") << R"({"top_k": 3, "colour": "red"})";
  CHECK_THROWS_AS(c.merge_file(dir / "bad.json"), ConfigError);
  std::ofstream(dir / "zero.json") << R"({"top_k": 0})";
  CHECK_THROWS_AS(RunConfig{}.merge_file(dir / "zero.json"), ConfigError);
  CHECK_THROWS_AS(c.merge_file(dir / "absent.json"), ConfigError);

  RunConfig auto_sample;
  CHECK_FALSE(auto_sample.sample_for(20000).has_value());
  CHECK(auto_sample.sample_for(20001) == kAutoSampleSources);
  auto_sample.sample = 5;
  CHECK(auto_sample.sample_for(10) == 5);
}

TEST_CASE("command line exit codes") {
  auto out = scratch("cli");
  const std::string o = "--out " + out.string();
  CHECK(run(o + " parse " BIBNET_TEST_DATA "/fixture20.txt") == 0);
  CHECK(run(o + " parse " BIBNET_TEST_DATA "/does_not_exist.txt") == 1);
  CHECK(run(o + " --config " BIBNET_TEST_DATA "/does_not_exist.json parse " BIBNET_TEST_DATA "/fixture20.txt") == 2);
  CHECK(run(o + " --top-k 0 stats " + (out / "corpus.jsonl").string()) == 2);
  CHECK(run(o + " network --kind citation " + (out / "corpus.jsonl").string()) == 2);
  CHECK(run(o + " stats " + (out / "corpus.jsonl").string()) == 0);
  CHECK(run(o + " keywords -n 5 " + (out / "corpus.jsonl").string()) == 0);
  auto words = read_json(out / "keywords/keyword_frequencies.json");
  REQUIRE(words.size() == 5);
  CHECK(words[0][0] == "covid-19");
  CHECK(run(o + " dedup-authors " + (out / "corpus.jsonl").string()) == 0);
  auto pairs = slurp(out / "dedup/suspect_authors.csv");
  CHECK(pairs.find("\"Rodriguez-Jimenez, P.\",\"Rodriguez-Jimenez, Pedro\",0.911111") != std::string::npos);

  // A corpus without authors cannot give a collaboration ratio.
  std::ofstream(out / "anon.txt") << "PT J\nAF [anonymous]\nTI Alone\nPD MAR\nPY 2020\nPG 3\nER\n";
  auto anon = fs::path(out / "anon");
  CHECK(run("--out " + anon.string() + " parse " + (out / "anon.txt").string()) == 0);
  CHECK(run("--out " + anon.string() + " stats " + (anon / "corpus.jsonl").string()) == 3);

  // BIBNET_OUT supplies the default output directory.
  auto env_out = scratch("cli_env");
  std::string cmd = "BIBNET_OUT=" + env_out.string() + " " + BIBNET_CLI + " parse " BIBNET_TEST_DATA
                    "/fixture20.txt > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(env_out / "parse_summary.json"));
}
