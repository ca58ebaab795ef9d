#include <string>
#include <string_view>

#include "bibnet/graph.hpp"
#include "bibnet/strings.hpp"

namespace bibnet {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_graphml(std::ostream& out, const WeightedGraph& g) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
         "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
         "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n"
         "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
  out << "  <graph id=\"" << to_string(g.kind()) << "\" edgedefault=\"undirected\">\n";
  for (const auto& label : g.labels()) out << "    <node id=\"" << xml_escape(label) << "\"/>\n";
  for (const auto& e : g.edges()) {
    out << "    <edge source=\"" << xml_escape(g.label(e.u)) << "\" target=\""
        << xml_escape(g.label(e.v)) << "\"><data key=\"weight\">" << e.weight
        << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << dot_quote(to_string(g.kind())) << " {\n";
  for (const auto& label : g.labels()) out << "  " << dot_quote(label) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(g.label(e.u)) << " -- " << dot_quote(g.label(e.v))
        << " [weight=" << e.weight << "];\n";
  }
  out << "}\n";
}

void write_edge_list_csv(std::ostream& out, const WeightedGraph& g) {
  out << "label_a,label_b,weight\n";
  for (const auto& e : g.edges()) {
    out << text::csv_cell(g.label(e.u)) << ',' << text::csv_cell(g.label(e.v)) << ','
        << e.weight << '\n';
  }
}

}  // namespace bibnet
