#include "laman/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>

#include "laman/errors.hpp"

namespace laman {

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

namespace {

// The bigraph is encoded as a vertex-colored incidence structure: left
// vertices, right vertices and biedge nodes form three color classes, and
// each biedge node is linked to its endpoints on both sides (a loop
// contributes one link of weight 2). Biedges sharing both endpoint pairs
// are interchangeable, so they collapse into one node carrying the
// multiplicity; this keeps the backtracking tree small when contractions
// produce many parallel edges.
struct Incidence {
    std::uint32_t n_left = 0;
    std::uint32_t n_right = 0;
    struct Group {
        std::uint32_t lu, lv; // left endpoints as dense indices, lu <= lv
        std::uint32_t ru, rv; // right endpoints as dense indices, ru <= rv
        std::uint32_t mult;
    };
    std::vector<Group> groups;
    // weighted adjacency per node; node layout: left, right, then groups
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;
    std::vector<std::uint32_t> init_color;

    std::size_t size() const { return adj.size(); }
};

Incidence build_incidence(const Bigraph& b) {
    Incidence inc;
    std::unordered_map<VertexId, std::uint32_t> lidx, ridx;
    for (VertexId v : b.left().vertices())
        lidx.emplace(v, static_cast<std::uint32_t>(lidx.size()));
    for (VertexId v : b.right().vertices())
        ridx.emplace(v, static_cast<std::uint32_t>(ridx.size()));
    inc.n_left = static_cast<std::uint32_t>(lidx.size());
    inc.n_right = static_cast<std::uint32_t>(ridx.size());

    // Group biedges by their endpoint pairs on both sides.
    std::map<std::array<std::uint32_t, 4>, std::uint32_t> twin;
    const auto& redges = b.right().edges();
    for (std::size_t i = 0; i < b.left().edges().size(); ++i) {
        const MultiEdge& le = b.left().edges()[i];
        const MultiEdge& re = redges[i]; // same id order on both sides
        std::uint32_t lu = lidx.at(le.u), lv = lidx.at(le.v);
        std::uint32_t ru = ridx.at(re.u), rv = ridx.at(re.v);
        if (lu > lv) std::swap(lu, lv);
        if (ru > rv) std::swap(ru, rv);
        ++twin[{lu, lv, ru, rv}];
    }
    for (const auto& [ep, mult] : twin)
        inc.groups.push_back({ep[0], ep[1], ep[2], ep[3], mult});

    std::size_t n = inc.n_left + inc.n_right + inc.groups.size();
    inc.adj.resize(n);
    auto link = [&](std::uint32_t gnode, std::uint32_t a, std::uint32_t bnode, std::uint32_t m) {
        std::uint32_t w = (a == bnode) ? 2 * m : m;
        inc.adj[gnode].push_back({a, w});
        inc.adj[a].push_back({gnode, w});
        if (a != bnode) {
            inc.adj[gnode].push_back({bnode, w});
            inc.adj[bnode].push_back({gnode, w});
        }
    };
    for (std::size_t gi = 0; gi < inc.groups.size(); ++gi) {
        const auto& g = inc.groups[gi];
        std::uint32_t gnode = inc.n_left + inc.n_right + static_cast<std::uint32_t>(gi);
        link(gnode, g.lu, g.lv, g.mult);
        link(gnode, inc.n_left + g.ru, inc.n_left + g.rv, g.mult);
    }

    // Initial colors: left vertices, right vertices, then group classes by
    // (multiplicity, loop pattern) so unequal groups can never align.
    std::map<std::tuple<std::uint32_t, bool, bool>, std::uint32_t> gclass;
    for (const auto& g : inc.groups)
        gclass.emplace(std::make_tuple(g.mult, g.lu == g.lv, g.ru == g.rv), 0u);
    std::uint32_t next = 2;
    for (auto& [k, c] : gclass) c = next++;

    inc.init_color.resize(n);
    for (std::uint32_t i = 0; i < inc.n_left; ++i) inc.init_color[i] = 0;
    for (std::uint32_t i = 0; i < inc.n_right; ++i) inc.init_color[inc.n_left + i] = 1;
    for (std::size_t gi = 0; gi < inc.groups.size(); ++gi) {
        const auto& g = inc.groups[gi];
        inc.init_color[inc.n_left + inc.n_right + gi] =
            gclass.at(std::make_tuple(g.mult, g.lu == g.lv, g.ru == g.rv));
    }
    return inc;
}

using Coloring = std::vector<std::uint64_t>;

// Iterative refinement: a node's signature is its color plus the sorted
// list of (neighbor color, link weight) pairs; nodes are re-ranked by
// signature until the partition stops splitting. Ranks are assigned in
// signature order, so isomorphic inputs refine to matching colorings.
void refine(const Incidence& inc, Coloring& color) {
    const std::size_t n = inc.size();
    std::vector<std::vector<std::uint64_t>> sig(n);
    std::vector<std::uint32_t> order(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) {
            auto& s = sig[i];
            s.clear();
            s.push_back(color[i]);
            for (auto [nb, w] : inc.adj[i]) s.push_back((color[nb] << 16) | w);
            std::sort(s.begin() + 1, s.end());
        }
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
        std::uint64_t next = 0;
        bool changed = false;
        Coloring fresh(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
            fresh[order[i]] = next;
            if (fresh[order[i]] != color[order[i]]) changed = true;
        }
        color = std::move(fresh);
        if (!changed) return;
    }
}

bool is_discrete(const Coloring& color) {
    std::vector<bool> seen(color.size(), false);
    for (std::uint64_t c : color) {
        if (c >= color.size() || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

// Serialize the structure under a discrete coloring. Left vertices occupy
// canonical positions 0..nL-1 and right vertices the next nR (refinement
// preserves the initial class order), so groups can reference side-local
// positions directly.
std::string extract_certificate(const Incidence& inc, const Coloring& color) {
    const std::uint32_t nL = inc.n_left, nR = inc.n_right;
    const std::uint32_t nG = static_cast<std::uint32_t>(inc.groups.size());
    struct Row {
        std::uint64_t pos;
        std::uint32_t mult, l0, l1, r0, r1;
    };
    std::vector<Row> rows;
    rows.reserve(nG);
    for (std::uint32_t gi = 0; gi < nG; ++gi) {
        const auto& g = inc.groups[gi];
        std::uint64_t l0 = color[g.lu], l1 = color[g.lv];
        std::uint64_t r0 = color[nL + g.ru] - nL, r1 = color[nL + g.rv] - nL;
        if (l0 > l1) std::swap(l0, l1);
        if (r0 > r1) std::swap(r0, r1);
        rows.push_back({color[nL + nR + gi], g.mult,
                        static_cast<std::uint32_t>(l0), static_cast<std::uint32_t>(l1),
                        static_cast<std::uint32_t>(r0), static_cast<std::uint32_t>(r1)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.pos < b.pos; });

    std::string cert;
    cert.reserve(3 + 5 * rows.size());
    cert.push_back(static_cast<char>(nL));
    cert.push_back(static_cast<char>(nR));
    cert.push_back(static_cast<char>(nG));
    for (const Row& r : rows) {
        cert.push_back(static_cast<char>(r.mult));
        cert.push_back(static_cast<char>(r.l0));
        cert.push_back(static_cast<char>(r.l1));
        cert.push_back(static_cast<char>(r.r0));
        cert.push_back(static_cast<char>(r.r1));
    }
    return cert;
}

struct Searcher {
    const Incidence& inc;
    std::optional<std::string> best;

    void search(Coloring color) {
        refine(inc, color);
        if (is_discrete(color)) {
            std::string cert = extract_certificate(inc, color);
            if (!best || cert < *best) best = std::move(cert);
            return;
        }
        // Target the first non-singleton class and branch over its members.
        std::uint64_t target = ~std::uint64_t(0);
        std::vector<std::size_t> klass;
        {
            std::map<std::uint64_t, std::vector<std::size_t>> classes;
            for (std::size_t i = 0; i < color.size(); ++i) classes[color[i]].push_back(i);
            for (auto& [c, members] : classes) {
                if (members.size() > 1) {
                    target = c;
                    klass = members;
                    break;
                }
            }
        }
        for (std::size_t node : klass) {
            // Double all colors, then slot the individualized node just
            // before its old class; no other class can collide.
            Coloring child(color.size());
            for (std::size_t i = 0; i < color.size(); ++i) child[i] = color[i] * 2 + 2;
            child[node] = target * 2 + 1;
            search(std::move(child));
        }
    }
};

} // namespace

CanonicalKey canonical_key(const Bigraph& b) {
    if (b.left().vertex_count() > 250 || b.right().vertex_count() > 250 ||
        b.biedge_count() > 250)
        throw InputError("bigraph too large to canonicalize");
    Incidence inc = build_incidence(b);
    Searcher s{inc, std::nullopt};
    Coloring init(inc.init_color.begin(), inc.init_color.end());
    s.search(std::move(init));
    return CanonicalKey{std::move(*s.best)};
}

} // namespace laman
