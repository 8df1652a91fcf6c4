#pragma once

#include "laman/simple_graph.hpp"

namespace laman {

// Generic rigidity in the plane: |E| = 2|V| - 3 and every subgraph G' has
// |E'| <= 2|V'| - 3. Decided with the (2,3)-pebble game.
bool is_laman(const SimpleGraph& g);

// Same predicate by exhaustive vertex-subset enumeration; trusted test
// oracle for is_laman. Refuses graphs with more than 14 vertices.
bool is_laman_bruteforce(const SimpleGraph& g);

} // namespace laman
