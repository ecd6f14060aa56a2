#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "threshold_lab/graph.hpp"

namespace tlab {

// graph6 / sparse6 codecs (the nauty text formats, simple graphs only).
Graph parse_graph6(std::string_view s);
Graph parse_sparse6(std::string_view s);
// Dispatches on the ':' prefix and the optional >>graph6<< / >>sparse6<< headers.
Graph parse_graph_line(std::string_view s);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines and lines starting with '#' are skipped.
std::vector<Graph> read_graph_stream(std::istream& in);
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace tlab
