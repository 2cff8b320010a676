#include "satkit/io.hpp"

#include <fstream>
#include <sstream>

namespace satkit {

namespace {

bool is_comment_or_blank(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 0)
                throw ParseError(line_no, "expected a nonnegative vertex count");
            std::string rest;
            if (fields >> rest) throw ParseError(line_no, "trailing data after vertex count");
            continue;
        }
        int u = 0, v = 0;
        if (!(fields >> u >> v)) throw ParseError(line_no, "expected an edge 'u v'");
        std::string rest;
        if (fields >> rest) throw ParseError(line_no, "trailing data after edge");
        if (u < 0 || v >= n || u >= v)
            throw ParseError(line_no, "edge must satisfy 0 <= u < v < n");
        for (auto [a, b] : edges)
            if (a == u && b == v) throw ParseError(line_no, "duplicate edge");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(line_no, "missing vertex count");
    return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace satkit
