#include "lapmap/graph_export.hpp"

#include "lapmap/reports.hpp"

#include <ostream>
#include <stdexcept>

namespace lapmap {

namespace {

std::string xml_escape(const std::string& s) {
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

void check_sizes(const ProximityGraph& g, const DistanceMatrix& d,
                 const HeatWeightedGraph* weighted) {
    if (g.vertex_count() != d.size()) {
        throw std::invalid_argument("graph and distance matrix disagree on vertex count");
    }
    if (weighted && weighted->size() != d.size()) {
        throw std::invalid_argument("weighted graph and distance matrix disagree on vertex count");
    }
}

}  // namespace

void write_graphml(std::ostream& out, const ProximityGraph& g, const DistanceMatrix& d,
                   const HeatWeightedGraph* weighted) {
    check_sizes(g, d, weighted);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"sq_dist\" for=\"edge\" attr.name=\"sq_dist\" attr.type=\"double\"/>\n";
    if (weighted) {
        out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    }
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        out << "    <node id=\"n" << i << "\"><data key=\"label\">"
            << xml_escape(g.vertex_labels[static_cast<std::size_t>(i)]) << "</data></node>\n";
    }
    for (const auto& [i, j] : g.edges) {
        out << "    <edge source=\"n" << i << "\" target=\"n" << j << "\">"
            << "<data key=\"sq_dist\">" << format_double(d.sq_dist(i, j)) << "</data>";
        if (weighted) {
            out << "<data key=\"weight\">" << format_double(weighted->weights(i, j)) << "</data>";
        }
        out << "</edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const ProximityGraph& g, const DistanceMatrix& d,
               const HeatWeightedGraph* weighted) {
    check_sizes(g, d, weighted);
    out << "graph G {\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        out << "  n" << i << " [label=\"" << g.vertex_labels[static_cast<std::size_t>(i)]
            << "\"];\n";
    }
    for (const auto& [i, j] : g.edges) {
        out << "  n" << i << " -- n" << j << " [sq_dist=" << format_double(d.sq_dist(i, j));
        if (weighted) {
            out << ", weight=" << format_double(weighted->weights(i, j));
        }
        out << "];\n";
    }
    out << "}\n";
}

}  // namespace lapmap
