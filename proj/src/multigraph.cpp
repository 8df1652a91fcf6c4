#include "laman/multigraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "laman/errors.hpp"
#include "laman/union_find.hpp"

namespace laman {

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<MultiEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const MultiEdge& a, const MultiEdge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
        if (edges_[i].id == edges_[i + 1].id)
            throw InputError("duplicate edge id " + std::to_string(edges_[i].id));
    }
    for (const MultiEdge& e : edges_) {
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw InputError("edge " + std::to_string(e.id) + " references unknown vertex");
    }
}

bool Multigraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const MultiEdge* Multigraph::find_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const MultiEdge& e, EdgeId x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
}

bool Multigraph::has_self_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const MultiEdge& e) { return e.is_loop(); });
}

std::vector<EdgeId> Multigraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const MultiEdge& e : edges_) ids.push_back(e.id);
    return ids;
}

namespace {

// Dense vertex index for union-find work.
std::unordered_map<VertexId, std::uint32_t> dense_index(const Multigraph& g) {
    std::unordered_map<VertexId, std::uint32_t> idx;
    idx.reserve(g.vertex_count());
    for (VertexId v : g.vertices()) idx.emplace(v, static_cast<std::uint32_t>(idx.size()));
    return idx;
}

// Sorted copy of `es` with duplicates removed; every id must exist in g.
std::vector<EdgeId> checked_edge_set(const Multigraph& g, std::span<const EdgeId> es) {
    std::vector<EdgeId> set(es.begin(), es.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (EdgeId id : set) {
        if (!g.find_edge(id))
            throw InputError("unknown edge id " + std::to_string(id));
    }
    return set;
}

} // namespace

int dim(const Multigraph& g) {
    auto idx = dense_index(g);
    UnionFind uf(g.vertex_count());
    int merges = 0;
    for (const MultiEdge& e : g.edges()) {
        if (uf.unite(idx.at(e.u), idx.at(e.v))) ++merges;
    }
    // |V| - #components equals the number of merging unions.
    return merges;
}

Multigraph quotient(const Multigraph& g, std::span<const EdgeId> es) {
    std::vector<EdgeId> set = checked_edge_set(g, es);
    auto idx = dense_index(g);
    UnionFind uf(g.vertex_count());
    for (const MultiEdge& e : g.edges()) {
        if (std::binary_search(set.begin(), set.end(), e.id))
            uf.unite(idx.at(e.u), idx.at(e.v));
    }
    // Each class is named after its smallest member so results are
    // reproducible.
    std::vector<VertexId> rep(g.vertex_count(), ~VertexId(0));
    for (VertexId v : g.vertices()) {
        std::uint32_t root = uf.find(idx.at(v));
        rep[root] = std::min(rep[root], v);
    }
    std::vector<VertexId> verts;
    for (VertexId v : g.vertices()) {
        if (rep[uf.find(idx.at(v))] == v) verts.push_back(v);
    }
    std::vector<MultiEdge> edges;
    for (const MultiEdge& e : g.edges()) {
        if (std::binary_search(set.begin(), set.end(), e.id)) continue;
        edges.push_back({e.id, rep[uf.find(idx.at(e.u))], rep[uf.find(idx.at(e.v))]});
    }
    return Multigraph(std::move(verts), std::move(edges));
}

Multigraph complement(const Multigraph& g, std::span<const EdgeId> es) {
    std::vector<EdgeId> set = checked_edge_set(g, es);
    std::vector<MultiEdge> edges;
    std::vector<VertexId> verts;
    for (const MultiEdge& e : g.edges()) {
        if (std::binary_search(set.begin(), set.end(), e.id)) continue;
        edges.push_back(e);
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    return Multigraph(std::move(verts), std::move(edges));
}

} // namespace laman
