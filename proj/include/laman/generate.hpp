#pragma once

#include <vector>

#include "laman/rigidity.hpp"

namespace laman {

struct GenerateOptions {
    int jobs = 1; // >1 parallelizes over parents (OpenMP); output is unchanged
};

// New vertex joined to two existing distinct vertices.
SimpleGraph henneberg_type1(const SimpleGraph& g, VertexId u, VertexId v);

// Split edge {u,v} with a new vertex z and attach z to a third vertex w.
SimpleGraph henneberg_type2(const SimpleGraph& g, VertexId u, VertexId v, VertexId w);

// All one-move extensions of g (both move types, all placements).
std::vector<SimpleGraph> henneberg_children(const SimpleGraph& g);

// All Laman graphs on exactly n vertices (3 <= n <= 9), up to isomorphism,
// grown from a single edge by Henneberg moves and deduplicated on canonical
// keys. Output is sorted by key, so it is deterministic regardless of jobs.
std::vector<SimpleGraph> generate_laman(int n, const GenerateOptions& opts = {});

} // namespace laman
