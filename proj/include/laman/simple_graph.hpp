#pragma once

#include <utility>
#include <vector>

#include "laman/bigraph.hpp"
#include "laman/canonical.hpp"

namespace laman {

// Simple undirected graph: no self-loops, no parallel edges.
class SimpleGraph {
public:
    using Edge = std::pair<VertexId, VertexId>; // stored with first < second

    SimpleGraph() = default;
    SimpleGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);
    // Vertex set inferred from the endpoints.
    static SimpleGraph from_edges(std::vector<Edge> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; } // sorted
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
};

// Two disjoint copies of g sharing biedge ids 0..|E|-1 in edge order.
Bigraph doubled_bigraph(const SimpleGraph& g);

// Isomorphism-complete key for simple graphs, via the doubled bigraph.
CanonicalKey canonical_key(const SimpleGraph& g);

} // namespace laman
