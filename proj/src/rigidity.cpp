#include "laman/rigidity.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "laman/errors.hpp"

namespace laman {

namespace {

// (2,3)-pebble game [Lee-Streinu]. Every vertex starts with 2 pebbles; an
// edge (u,v) may be inserted once 4 pebbles sit on {u,v}, consuming one.
// Pebbles are gathered by reversing directed paths to free pebbles.
class PebbleGame {
public:
    explicit PebbleGame(std::size_t n) : pebbles_(n, 2), out_(n) {}

    bool insert(std::uint32_t u, std::uint32_t v) {
        while (pebbles_[u] + pebbles_[v] < 4) {
            if (!gather(u, v) && !gather(v, u)) return false;
        }
        // Both endpoints hold 2 pebbles here (per-vertex max is 2).
        --pebbles_[u];
        out_[u].push_back(v);
        return true;
    }

private:
    // Find a free pebble reachable from `root` avoiding `other`, and pull
    // it to `root` by reversing the path.
    bool gather(std::uint32_t root, std::uint32_t other) {
        if (pebbles_[root] >= 2) return false;
        std::vector<std::int32_t> parent(pebbles_.size(), -1);
        std::vector<std::uint32_t> stack{root};
        parent[root] = static_cast<std::int32_t>(root);
        parent[other] = static_cast<std::int32_t>(other); // never take from the other endpoint
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (std::uint32_t y : out_[x]) {
                if (parent[y] != -1) continue;
                parent[y] = static_cast<std::int32_t>(x);
                if (pebbles_[y] > 0) {
                    --pebbles_[y];
                    ++pebbles_[root];
                    reverse_path(root, y, parent);
                    return true;
                }
                stack.push_back(y);
            }
        }
        return false;
    }

    void reverse_path(std::uint32_t root, std::uint32_t leaf,
                      const std::vector<std::int32_t>& parent) {
        std::uint32_t y = leaf;
        while (y != root) {
            std::uint32_t x = static_cast<std::uint32_t>(parent[y]);
            auto it = std::find(out_[x].begin(), out_[x].end(), y);
            out_[x].erase(it);
            out_[y].push_back(x);
            y = x;
        }
    }

    std::vector<int> pebbles_;
    std::vector<std::vector<std::uint32_t>> out_;
};

std::unordered_map<VertexId, std::uint32_t> dense_index(const SimpleGraph& g) {
    std::unordered_map<VertexId, std::uint32_t> idx;
    idx.reserve(g.vertex_count());
    for (VertexId v : g.vertices()) idx.emplace(v, static_cast<std::uint32_t>(idx.size()));
    return idx;
}

} // namespace

bool is_laman(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) return false;
    if (g.edge_count() != 2 * n - 3) return false;
    auto idx = dense_index(g);
    PebbleGame game(n);
    for (const auto& [u, v] : g.edges()) {
        if (!game.insert(idx.at(u), idx.at(v))) return false;
    }
    return true;
}

bool is_laman_bruteforce(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 14) throw InputError("brute-force Laman check limited to 14 vertices");
    if (n < 2) return false;
    if (g.edge_count() != 2 * n - 3) return false;
    auto idx = dense_index(g);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back({idx.at(u), idx.at(v)});
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int nv = __builtin_popcount(mask);
        if (nv < 2) continue;
        int ne = 0;
        for (const auto& [u, v] : edges) {
            if ((mask >> u & 1) && (mask >> v & 1)) ++ne;
        }
        if (ne > 2 * nv - 3) return false;
    }
    return true;
}

} // namespace laman
