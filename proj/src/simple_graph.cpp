#include "laman/simple_graph.hpp"

#include <algorithm>
#include <string>

#include "laman/errors.hpp"

namespace laman {

SimpleGraph::SimpleGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (Edge& e : edges_) {
        if (e.first == e.second)
            throw InputError("self-loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("parallel edge");
    for (const Edge& e : edges_) {
        if (!has_vertex(e.first) || !has_vertex(e.second))
            throw InputError("edge endpoint not a vertex");
    }
}

SimpleGraph SimpleGraph::from_edges(std::vector<Edge> edges) {
    std::vector<VertexId> verts;
    for (const Edge& e : edges) {
        verts.push_back(e.first);
        verts.push_back(e.second);
    }
    return SimpleGraph(std::move(verts), std::move(edges));
}

bool SimpleGraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Bigraph doubled_bigraph(const SimpleGraph& g) {
    std::vector<MultiEdge> edges;
    edges.reserve(g.edge_count());
    EdgeId id = 0;
    for (const auto& [u, v] : g.edges()) edges.push_back({id++, u, v});
    Multigraph side(g.vertices(), edges);
    return Bigraph(side, side);
}

CanonicalKey canonical_key(const SimpleGraph& g) {
    return canonical_key(normalize(doubled_bigraph(g)));
}

} // namespace laman
