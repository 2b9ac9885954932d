#pragma once

#include <string>

#include "kout/graph.hpp"

namespace kout {

/**
 * Plain-text edge-list format: first line is the vertex count n, then one
 * "u v" line per edge.  Writing emits edges in canonical sorted order with
 * u < v and LF line endings, so write-then-read is the identity.
 */
Graph read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, const std::string& path);

/** Same format, but to/from strings (the file functions wrap these). */
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace kout
