#include <doctest.h>

#include <sstream>

#include "bibnet/graph.hpp"
#include "generators.hpp"

using namespace bibnet;

namespace {

BiblioRecord paper(std::vector<std::string> authors, std::string c1 = {}, std::vector<std::string> areas = {}) {
  BiblioRecord r;
  r.title = "t";
  r.author_full_names = std::move(authors);
  r.addresses = std::move(c1);
  r.research_areas = std::move(areas);
  return r;
}

}  // namespace

TEST_CASE("graph kind names") {
  CHECK(to_string(GraphKind::research_area) == "research-area");
  CHECK(parse_graph_kind("keyword") == GraphKind::keyword);
  CHECK_FALSE(parse_graph_kind("citation").has_value());
  CHECK(allows_self_loops(GraphKind::country));
  CHECK(allows_self_loops(GraphKind::institution));
  CHECK_FALSE(allows_self_loops(GraphKind::coauthor));
}

TEST_CASE("builder canonical form") {
  GraphBuilder a(GraphKind::coauthor);
  a.add_weight("c", "a");
  a.add_weight("a", "b", 2);
  a.add_weight("a", "c");
  GraphBuilder b(GraphKind::coauthor);
  b.add_weight("b", "a", 2);
  b.add_weight("a", "c", 2);
  auto ga = std::move(a).build();
  auto gb = std::move(b).build();
  CHECK(ga == gb);
  CHECK(ga.label(0) == "a");
  CHECK(ga.weight(*ga.find("c"), *ga.find("a")) == 2);
  CHECK(ga.weight(*ga.find("b"), *ga.find("c")) == 0);
  CHECK(ga.total_weight() == 4);
  CHECK(ga.weighted_degree(0) == 4);

  GraphBuilder bad(GraphKind::coauthor);
  CHECK_THROWS_AS(bad.add_weight("a", "a"), std::invalid_argument);
  CHECK_THROWS_AS(bad.add_weight("a", "b", 0), std::invalid_argument);
  GraphBuilder loops(GraphKind::country);
  loops.add_weight("USA", "USA", 3);
  auto gl = std::move(loops).build();
  CHECK(gl.self_loop_weight(0) == 3);
  CHECK(gl.weighted_degree(0) == 6);
  CHECK(gl.degree(0) == 0);
  CHECK(gl.total_weight() == 3);
}

TEST_CASE("co-authorship graph") {
  Corpus c({paper({"A", "B", "C"}), paper({"A", "B"}), paper({"D"}), paper({})});
  auto g = build_coauthorship(c);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.weight(*g.find("A"), *g.find("B")) == 2);
  CHECK(g.total_weight() == 4);
  auto f = graph_facts(g);
  CHECK(f.isolated_count == 1);
  CHECK(f.component_count == 2);
  CHECK(f.component_sizes == std::vector<std::size_t>{3, 1});
}

TEST_CASE("country graph pairs address segments") {
  Corpus c({paper({"A"}, "[A] U1, X, NJ 08540 USA; [B] U2, Y, USA; [C] U3, Z, England"),
            paper({"B"}, "[A] U1, X, Wales; [B] U2, Y, Scotland"), paper({"C"}, "[A] U4, X, Italy")});
  auto g = build_country_graph(c);
  CHECK(g.node_count() == 3);
  const auto usa = *g.find("USA"), uk = *g.find("United Kingdom");
  CHECK(g.self_loop_weight(usa) == 1);
  CHECK(g.weight(usa, uk) == 2);
  CHECK(g.self_loop_weight(uk) == 1);
  auto f = graph_facts(g);
  CHECK(f.self_loop_count == 2);
  CHECK(f.isolated_count == 1);  // Italy
}

TEST_CASE("institution and co-occurrence graphs") {
  Corpus c({paper({"A"}, "[A] Univ Milan, X, Italy; [B] Univ Milan, Y, Italy; [C] MIT, Z, MA USA",
                  {"Virology", "Immunology", "Virology"}),
            paper({"B"}, "", {"Virology"})});
  auto inst = build_institution_graph(c);
  CHECK(inst.self_loop_weight(*inst.find("Univ Milan")) == 1);
  CHECK(inst.weight(*inst.find("Univ Milan"), *inst.find("MIT")) == 2);
  auto areas = build_cooccurrence(c, CooccurrenceField::research_area);
  CHECK(areas.node_count() == 2);
  CHECK(areas.weight(0, 1) == 1);

  auto r1 = paper({"A"});
  r1.author_keywords = {"COVID-19", "covid-19", "Lockdown"};
  auto r2 = paper({"B"});
  r2.author_keywords = {"Lockdown", "Covid-19"};
  auto kw = build_cooccurrence(Corpus({r1, r2}), CooccurrenceField::keyword);
  CHECK(kw.node_count() == 2);
  CHECK(kw.weight(*kw.find("covid-19"), *kw.find("lockdown")) == 2);
}

TEST_CASE("edge weights conserve pair counts") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto recs = gen::random_author_records(60, 25, 6, seed);
    std::uint64_t pairs = 0;
    for (const auto& r : recs) {
      const std::uint64_t m = r.author_full_names.size();
      pairs += m < 2 ? 0 : m * (m - 1) / 2;
    }
    CHECK(build_coauthorship(Corpus(recs)).total_weight() == pairs);
  }
}

TEST_CASE("components and subgraphs") {
  // Triangle 0-1-2, edge 3-4, isolated 5.
  auto g = gen::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});
  CHECK(comps[1] == std::vector<NodeId>{3, 4});
  CHECK(comps[2] == std::vector<NodeId>{5});
  auto f = graph_facts(g);
  CHECK(f.node_count == 6);
  CHECK(f.edge_count == 4);
  CHECK(f.isolated_count == 1);
  CHECK(f.component_count == 3);
  auto lc = largest_component(g);
  CHECK(lc.node_count() == 3);
  CHECK(lc.edge_count() == 3);
  CHECK(lc.label(0) == gen::node_label(0));
  auto empty = graph_facts(WeightedGraph{});
  CHECK(empty.node_count == 0);
  CHECK(empty.component_count == 0);
}

TEST_CASE("top weighted edges") {
  GraphBuilder b(GraphKind::country);
  b.add_weight("USA", "USA", 9);
  b.add_weight("USA", "China", 4);
  b.add_weight("Italy", "Spain", 4);
  b.add_weight("Italy", "USA", 1);
  auto g = std::move(b).build();
  auto with = top_weighted_edges(g, 3, true);
  REQUIRE(with.size() == 3);
  CHECK(with[0] == WeightedEdge{"USA", "USA", 9});
  CHECK(with[1] == WeightedEdge{"China", "USA", 4});
  CHECK(with[2] == WeightedEdge{"Italy", "Spain", 4});
  auto without = top_weighted_edges(g, 1, false);
  CHECK(without == std::vector<WeightedEdge>{{"China", "USA", 4}});
  CHECK(top_weighted_edges(g, 10, true).size() == 4);
  CHECK_THROWS_AS(top_weighted_edges(g, 0, true), std::invalid_argument);
}

TEST_CASE("exports") {
  GraphBuilder b(GraphKind::coauthor);
  b.add_weight("O'Neill, Sean", "Smith & Co", 2);
  b.add_node("Solo \"Q\"");
  auto g = std::move(b).build();
  std::ostringstream gml, dot, csv;
  write_graphml(gml, g);
  write_dot(dot, g);
  write_edge_list_csv(csv, g);
  CHECK(gml.str().find("<key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>") !=
        std::string::npos);
  CHECK(gml.str().find("Smith &amp; Co") != std::string::npos);
  CHECK(gml.str().find("<data key=\"weight\">2</data>") != std::string::npos);
  CHECK(gml.str().find("edgedefault=\"undirected\"") != std::string::npos);
  CHECK(dot.str().find("\"O'Neill, Sean\" -- \"Smith & Co\" [weight=2];") != std::string::npos);
  CHECK(dot.str().find("\"Solo \\\"Q\\\"\"") != std::string::npos);
  CHECK(csv.str() == "label_a,label_b,weight\n\"O'Neill, Sean\",Smith & Co,2\n");
}
