#pragma once

#include <string>

#include "laman/simple_graph.hpp"

namespace laman {

// One edge per line: two nonnegative integers separated by whitespace.
// '#' starts a comment; blank lines are skipped. Self-loops and duplicate
// edges are rejected with the offending line number.
SimpleGraph parse_edge_list(const std::string& text);

SimpleGraph read_edge_list_file(const std::string& path);

std::string write_edge_list(const SimpleGraph& g);

} // namespace laman
