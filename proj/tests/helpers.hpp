#pragma once

// Shared fixtures and brute-force reference implementations. Everything here
// is deliberately naive: these are the independent yardsticks the fast code
// is measured against.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "laman/bigraph.hpp"
#include "laman/canonical.hpp"
#include "laman/engine.hpp"
#include "laman/generate.hpp"
#include "laman/multigraph.hpp"
#include "laman/rigidity.hpp"
#include "laman/simple_graph.hpp"

namespace testutil {

using namespace laman;

inline SimpleGraph triangle() { return SimpleGraph::from_edges({{0, 1}, {0, 2}, {1, 2}}); }

inline SimpleGraph k4() {
    return SimpleGraph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline SimpleGraph k4_minus_e() {
    return SimpleGraph::from_edges({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline SimpleGraph prism() {
    return SimpleGraph::from_edges(
        {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Deterministic growth from a triangle, alternating the two Henneberg moves;
// {z-1, z-2} stays an edge after every step so the type-II split is valid.
inline SimpleGraph grow_alternating(int n) {
    SimpleGraph g = triangle();
    for (VertexId z = 3; z < static_cast<VertexId>(n); ++z) {
        if (z % 2 == 1)
            g = henneberg_type1(g, z - 1, z - 2);
        else
            g = henneberg_type2(g, z - 1, z - 2, z - 3);
    }
    return g;
}

inline Multigraph mg(std::vector<VertexId> vs,
                     std::vector<std::tuple<EdgeId, VertexId, VertexId>> es) {
    std::vector<MultiEdge> edges;
    edges.reserve(es.size());
    for (auto [id, u, v] : es) edges.push_back({id, u, v});
    return Multigraph(std::move(vs), std::move(edges));
}

inline Multigraph triangle_mg() { return mg({0, 1, 2}, {{0, 0, 1}, {1, 0, 2}, {2, 1, 2}}); }

inline Multigraph k4_minus_e_mg() {
    return mg({0, 1, 2, 3}, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 1, 2}, {4, 1, 3}});
}

// Subgraph of g determined by an edge set: those edges plus their endpoints.
inline Multigraph spanned_subgraph(const Multigraph& g, const std::vector<EdgeId>& es) {
    std::vector<VertexId> vs;
    std::vector<MultiEdge> edges;
    for (EdgeId id : es) {
        const MultiEdge* e = g.find_edge(id);
        vs.push_back(e->u);
        vs.push_back(e->v);
        edges.push_back(*e);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Multigraph(std::move(vs), std::move(edges));
}

// Exhaustive bigraph isomorphism: some pair of vertex bijections makes the
// biedge endpoint multisets coincide (a biedge bijection then exists).
inline bool brute_bigraph_isomorphic(const Bigraph& a, const Bigraph& b) {
    const auto& al = a.left().vertices();
    const auto& ar = a.right().vertices();
    const auto& bl = b.left().vertices();
    const auto& br = b.right().vertices();
    if (al.size() != bl.size() || ar.size() != br.size() ||
        a.biedge_count() != b.biedge_count())
        return false;
    auto pos = [](const std::vector<VertexId>& vs, VertexId v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    using Quad = std::tuple<int, int, int, int>;
    std::vector<Quad> target;
    for (const MultiEdge& eg : b.left().edges()) {
        const MultiEdge* eh = b.right().find_edge(eg.id);
        int u = pos(bl, eg.u), v = pos(bl, eg.v);
        int x = pos(br, eh->u), y = pos(br, eh->v);
        target.emplace_back(std::min(u, v), std::max(u, v), std::min(x, y), std::max(x, y));
    }
    std::sort(target.begin(), target.end());

    std::vector<int> lp(al.size()), rp(ar.size());
    std::iota(lp.begin(), lp.end(), 0);
    do {
        std::iota(rp.begin(), rp.end(), 0);
        do {
            std::vector<Quad> got;
            for (const MultiEdge& eg : a.left().edges()) {
                const MultiEdge* eh = a.right().find_edge(eg.id);
                int u = lp[pos(al, eg.u)], v = lp[pos(al, eg.v)];
                int x = rp[pos(ar, eh->u)], y = rp[pos(ar, eh->v)];
                got.emplace_back(std::min(u, v), std::max(u, v), std::min(x, y),
                                 std::max(x, y));
            }
            std::sort(got.begin(), got.end());
            if (got == target) return true;
        } while (std::next_permutation(rp.begin(), rp.end()));
    } while (std::next_permutation(lp.begin(), lp.end()));
    return false;
}

// All valid splits straight from the definition: every assignment of the
// non-pivot biedges, filtered with the library's minor operations. Emitted
// in the same order the fast enumerator promises (lexicographic in the
// membership string, pivot-side first).
inline std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> brute_splits(
    const Bigraph& b, EdgeId pivot) {
    std::vector<EdgeId> frees;
    for (EdgeId id : b.biedges())
        if (id != pivot) frees.push_back(id);
    const int k = static_cast<int>(frees.size());
    std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> out;
    for (std::uint64_t rank = 0; rank < (1ull << k); ++rank) {
        std::vector<EdgeId> m{pivot}, n{pivot};
        for (int j = 0; j < k; ++j) {
            bool to_n = (rank >> (k - 1 - j)) & 1; // first free edge varies slowest
            (to_n ? n : m).push_back(frees[j]);
        }
        if (m.size() < 2 || n.size() < 2) continue;
        std::sort(m.begin(), m.end());
        std::sort(n.begin(), n.end());
        if (is_pseudo_laman(left_quot(b, m)) && is_pseudo_laman(right_quot(b, n)))
            out.emplace_back(std::move(m), std::move(n));
    }
    return out;
}

inline Multigraph random_multigraph(std::mt19937_64& rng, int max_v = 6, int max_e = 8) {
    const int nv = 1 + static_cast<int>(rng() % max_v);
    std::vector<VertexId> pool(3 * max_v);
    std::iota(pool.begin(), pool.end(), 0u);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<VertexId> vs(pool.begin(), pool.begin() + nv);
    std::sort(vs.begin(), vs.end());
    const int ne = static_cast<int>(rng() % (max_e + 1));
    std::vector<MultiEdge> edges;
    for (int i = 0; i < ne; ++i)
        edges.push_back({static_cast<EdgeId>(i), vs[rng() % nv], vs[rng() % nv]});
    return Multigraph(std::move(vs), std::move(edges));
}

inline SimpleGraph random_simple_graph(std::mt19937_64& rng, int max_n = 10) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    std::vector<SimpleGraph::Edge> pairs;
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
        for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    // half the time sit exactly on the global count boundary
    std::size_t want = (rng() % 2 == 0) ? std::size_t(2 * n - 3)
                                        : 1 + rng() % pairs.size();
    want = std::min(want, pairs.size());
    pairs.resize(want);
    return SimpleGraph::from_edges(std::move(pairs));
}

// Every Laman graph on n vertices by filtering all (n, 2n-3) edge subsets
// with the subset-counting checker; independent of Henneberg generation.
inline std::set<CanonicalKey> laman_keys_exhaustive(int n) {
    std::vector<SimpleGraph::Edge> pairs;
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
        for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) pairs.push_back({u, v});
    const std::size_t m = 2 * n - 3;
    std::set<CanonicalKey> keys;
    std::vector<bool> pick(pairs.size(), false); // selector idiom over all m-subsets
    std::fill(pick.end() - m, pick.end(), true);
    do {
        std::vector<SimpleGraph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pick[i]) edges.push_back(pairs[i]);
        SimpleGraph g = SimpleGraph::from_edges(std::move(edges));
        if (g.vertex_count() == static_cast<std::size_t>(n) && is_laman_bruteforce(g))
            keys.insert(canonical_key(g));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return keys;
}

inline std::uint64_t count_graph(const SimpleGraph& g, int jobs = 1, bool early_zero = true,
                                 PivotStrategy ps = PivotStrategy::MaxDegree) {
    EngineOptions opts;
    opts.jobs = jobs;
    opts.early_zero = early_zero;
    opts.pivot_strategy = ps;
    LamanEngine engine(opts);
    return engine.laman_number_graph(g);
}

inline std::uint64_t count_bigraph(const Bigraph& b, int jobs = 1, bool early_zero = true) {
    EngineOptions opts;
    opts.jobs = jobs;
    opts.early_zero = early_zero;
    LamanEngine engine(opts);
    return engine.laman_number(b);
}

// Distinct normalized pseudo-Laman bigraphs seen while counting gs.
inline std::vector<Bigraph> traced_bigraphs(const std::vector<SimpleGraph>& gs,
                                            std::size_t cap = 1000) {
    std::vector<Bigraph> out;
    std::set<CanonicalKey> seen;
    EngineOptions opts;
    opts.trace = [&](const Bigraph& b) {
        if (out.size() >= cap) return;
        if (seen.insert(canonical_key(b)).second) out.push_back(b);
    };
    LamanEngine engine(opts);
    for (const SimpleGraph& g : gs) engine.laman_number_graph(g);
    return out;
}

} // namespace testutil
