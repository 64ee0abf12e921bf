#pragma once

#include <rolecol/graph.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace rolecol {

// Graph text format:
//   c <comment>
//   p graph <n> <m>
//   e <u> <v>        (1-based; "e v v" is a loop)
// Writers emit edges sorted with u <= v so output is byte-reproducible.

Graph read_graph(std::istream &in);
Graph read_graph_file(const std::string &path);

void write_graph(std::ostream &out, const Graph &g, const std::vector<std::string> &comments = {});
void write_graph_file(const std::string &path, const Graph &g, const std::vector<std::string> &comments = {});

/// Parses graph-format lines already split out of a larger file (e.g. the role
/// block of a colouring certificate). `first_line` is used in error messages.
Graph parse_graph_lines(const std::vector<std::string> &lines, int first_line);

} // namespace rolecol
