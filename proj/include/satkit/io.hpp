#ifndef SATKIT_IO_HPP
#define SATKIT_IO_HPP

#include "satkit/graph.hpp"

#include <iosfwd>
#include <string>

namespace satkit {

/// Malformed graph text; the message names the offending line.
struct ParseError : std::invalid_argument {
    ParseError(int line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    int line_number;
};

/// Text format: '#' lines are comments, first data line is n, then one
/// "u v" edge per line with 0 <= u < v < n. Duplicate edges are an error.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Emits n then the edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

}  // namespace satkit

#endif
