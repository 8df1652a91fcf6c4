#include "laman/generate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "laman/errors.hpp"

namespace laman {

SimpleGraph henneberg_type1(const SimpleGraph& g, VertexId u, VertexId v) {
    if (u == v || !g.has_vertex(u) || !g.has_vertex(v))
        throw InputError("type-1 move needs two distinct existing vertices");
    VertexId z = g.vertices().back() + 1;
    auto verts = g.vertices();
    verts.push_back(z);
    auto edges = g.edges();
    edges.push_back({u, z});
    edges.push_back({v, z});
    return SimpleGraph(std::move(verts), std::move(edges));
}

SimpleGraph henneberg_type2(const SimpleGraph& g, VertexId u, VertexId v, VertexId w) {
    if (!g.has_edge(u, v)) throw InputError("type-2 move needs an existing edge");
    if (w == u || w == v || !g.has_vertex(w))
        throw InputError("type-2 move needs a third distinct vertex");
    VertexId z = g.vertices().back() + 1;
    auto verts = g.vertices();
    verts.push_back(z);
    std::vector<SimpleGraph::Edge> edges;
    for (const auto& e : g.edges()) {
        if (e == SimpleGraph::Edge{std::min(u, v), std::max(u, v)}) continue;
        edges.push_back(e);
    }
    edges.push_back({u, z});
    edges.push_back({v, z});
    edges.push_back({w, z});
    return SimpleGraph(std::move(verts), std::move(edges));
}

std::vector<SimpleGraph> henneberg_children(const SimpleGraph& g) {
    std::vector<SimpleGraph> out;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            out.push_back(henneberg_type1(g, vs[i], vs[j]));
    for (const auto& [u, v] : g.edges())
        for (VertexId w : vs) {
            if (w == u || w == v) continue;
            out.push_back(henneberg_type2(g, u, v, w));
        }
    return out;
}

namespace {

// Tie-break isomorphic duplicates by their concrete representation so the
// surviving representative does not depend on discovery order (or on jobs).
bool rep_less(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertices() != b.vertices()) return a.vertices() < b.vertices();
    return a.edges() < b.edges();
}

void keep_min_rep(std::map<CanonicalKey, SimpleGraph>& m, CanonicalKey k, SimpleGraph g) {
    auto it = m.find(k);
    if (it == m.end())
        m.emplace(std::move(k), std::move(g));
    else if (rep_less(g, it->second))
        it->second = std::move(g);
}

} // namespace

std::vector<SimpleGraph> generate_laman(int n, const GenerateOptions& opts) {
    if (n < 3 || n > 9) throw InputError("generate_laman supports 3 <= n <= 9");

    // Level sets from the single edge upward, deduplicated per level.
    std::map<CanonicalKey, SimpleGraph> level;
    SimpleGraph k2 = SimpleGraph::from_edges({{0, 1}});
    level.emplace(canonical_key(k2), k2);

    for (int size = 3; size <= n; ++size) {
        std::vector<const SimpleGraph*> parents;
        parents.reserve(level.size());
        for (const auto& [k, g] : level) parents.push_back(&g);
        std::map<CanonicalKey, SimpleGraph> next;

#ifdef _OPENMP
        if (opts.jobs > 1) {
#pragma omp parallel num_threads(opts.jobs)
            {
                std::map<CanonicalKey, SimpleGraph> mine;
#pragma omp for schedule(dynamic) nowait
                for (std::size_t i = 0; i < parents.size(); ++i) {
                    for (SimpleGraph& child : henneberg_children(*parents[i])) {
                        CanonicalKey key = canonical_key(child); // before the move
                        keep_min_rep(mine, std::move(key), std::move(child));
                    }
                }
#pragma omp critical
                {
                    for (auto& [k, g] : mine) keep_min_rep(next, k, std::move(g));
                }
            }
        } else
#endif
        {
            for (const SimpleGraph* parent : parents) {
                for (SimpleGraph& child : henneberg_children(*parent)) {
                    CanonicalKey key = canonical_key(child); // before the move
                    keep_min_rep(next, std::move(key), std::move(child));
                }
            }
        }
        level = std::move(next);
    }

    std::vector<SimpleGraph> out;
    out.reserve(level.size());
    for (auto& [k, g] : level) {
        if (!is_laman(g))
            throw std::logic_error("Henneberg move produced a non-Laman graph");
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace laman
