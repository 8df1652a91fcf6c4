#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace laman {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct MultiEdge {
    EdgeId id;
    VertexId u, v; // endpoints; u == v is a self-loop

    bool is_loop() const { return u == v; }
    friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// Undirected multigraph. Parallel edges and self-loops are first-class and
// never merged; vertex and edge identifiers are opaque small integers.
class Multigraph {
public:
    Multigraph() = default;
    // Validates that edge ids are unique and every endpoint is a vertex.
    Multigraph(std::vector<VertexId> vertices, std::vector<MultiEdge> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<MultiEdge>& edges() const { return edges_; } // sorted by id
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(VertexId v) const;
    const MultiEdge* find_edge(EdgeId id) const; // nullptr when absent
    bool has_self_loop() const;
    std::vector<EdgeId> edge_ids() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::vector<VertexId> vertices_; // sorted, unique
    std::vector<MultiEdge> edges_;   // sorted by id
};

// |V| minus the number of connected components; isolated vertices each
// count as a component, so the empty graph has dim 0.
int dim(const Multigraph& g);

// Contract the edges `es`: vertices become the connectivity classes of the
// subgraph determined by `es`, each class named after its smallest member.
// Edges outside `es` survive with remapped endpoints; an edge whose
// endpoints land in one class becomes a self-loop.
Multigraph quotient(const Multigraph& g, std::span<const EdgeId> es);

// Delete the edges `es` and keep only vertices still incident to an edge.
Multigraph complement(const Multigraph& g, std::span<const EdgeId> es);

} // namespace laman
