#include "laman/engine.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "laman/errors.hpp"
#include "laman/rigidity.hpp"
#include "laman/union_find.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laman {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("solution count exceeds 64 bits in addition");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("solution count exceeds 64 bits in multiplication");
    return r;
}

MemoCache::Shard& MemoCache::shard_for(const CanonicalKey& key) {
    return shards_[std::hash<CanonicalKey>{}(key) % kShards];
}

bool MemoCache::lookup(const CanonicalKey& key, std::uint64_t& out) {
    Shard& s = shard_for(key);
    std::lock_guard<std::mutex> lk(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) {
        misses_.fetch_add(1, std::memory_order_relaxed);
        return false;
    }
    hits_.fetch_add(1, std::memory_order_relaxed);
    out = it->second;
    return true;
}

void MemoCache::insert(const CanonicalKey& key, std::uint64_t value) {
    Shard& s = shard_for(key);
    std::lock_guard<std::mutex> lk(s.mu);
    auto [it, fresh] = s.map.emplace(key, value);
    if (!fresh && it->second != value)
        throw std::logic_error("memo cache rebind: same key, different value");
}

std::size_t MemoCache::size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
        std::lock_guard<std::mutex> lk(s.mu);
        total += s.map.size();
    }
    return total;
}

void MemoCache::clear() {
    for (Shard& s : shards_) {
        std::lock_guard<std::mutex> lk(s.mu);
        s.map.clear();
    }
    hits_.store(0);
    misses_.store(0);
}

EdgeId choose_pivot(const Bigraph& b, PivotStrategy strategy) {
    const Multigraph& g = b.left();
    if (g.edge_count() == 0) throw InputError("cannot pick a pivot in a bigraph with no biedges");
    if (strategy == PivotStrategy::First) return g.edges().front().id;

    std::unordered_map<VertexId, int> deg;
    for (const MultiEdge& e : g.edges()) {
        deg[e.u]++;
        deg[e.v]++; // a loop counts twice toward its vertex
    }
    VertexId best = g.vertices().front();
    int best_deg = -1;
    for (VertexId v : g.vertices()) { // ascending, so ties keep the smallest id
        auto it = deg.find(v);
        int d = it == deg.end() ? 0 : it->second;
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    for (const MultiEdge& e : g.edges()) // ascending by id
        if (e.u == best || e.v == best) return e.id;
    throw std::logic_error("max-degree vertex has no incident edge");
}

namespace {

// Position of v in the sorted vertex list of g.
int vertex_index(const Multigraph& g, VertexId v) {
    const auto& vs = g.vertices();
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
}

} // namespace

std::vector<Split> enumerate_splits(const Bigraph& b, EdgeId pivot, RecursionStats* stats) {
    const Multigraph& g = b.left();
    const Multigraph& h = b.right();
    const MultiEdge* pg = g.find_edge(pivot);
    const MultiEdge* ph = h.find_edge(pivot);
    if (pg == nullptr || ph == nullptr) throw InputError("pivot biedge not present in bigraph");

    std::vector<EdgeId> free_ids;
    free_ids.reserve(g.edge_count());
    for (const MultiEdge& e : g.edges())
        if (e.id != pivot) free_ids.push_back(e.id);
    const int count = static_cast<int>(free_ids.size());

    // The two quotient-bigraphs of a candidate (M, N) are pseudo-Laman exactly
    // when two deficits vanish:
    //   delta1 = |N'| + 1 - dim(G) + dim(G[M])  - dim(H[N'])   for (G/M, H minus M)
    //   delta2 = |M'| + 1 - dim(H) + dim(H[N])  - dim(G[M'])   for (G minus N, H/N)
    // where M' = M \ {pivot}, N' = N \ {pivot}. Assigning one more biedge to
    // either side changes each deficit by 0 or +1, so a positive deficit can
    // never recover and a deficit below -remaining can never reach zero.
    RollbackUnionFind span_g_m(g.vertex_count());      // spans G[M]
    RollbackUnionFind span_g_mprime(g.vertex_count()); // spans G[M']
    RollbackUnionFind span_h_n(h.vertex_count());      // spans H[N]
    RollbackUnionFind span_h_nprime(h.vertex_count()); // spans H[N']

    int delta1 = 1 - dim(g) + (span_g_m.unite(vertex_index(g, pg->u), vertex_index(g, pg->v)) ? 1 : 0);
    int delta2 = 1 - dim(h) + (span_h_n.unite(vertex_index(h, ph->u), vertex_index(h, ph->v)) ? 1 : 0);

    std::vector<int> side(count, -1); // 0 -> M', 1 -> N'
    std::vector<Split> out;
    int size_m = 0, size_n = 0;
    std::uint64_t tested = 0, surviving = 0;

    auto emit = [&]() {
        Split s;
        s.pivot = pivot;
        s.m.push_back(pivot);
        s.n.push_back(pivot);
        for (int j = 0; j < count; ++j)
            (side[j] == 0 ? s.m : s.n).push_back(free_ids[j]);
        std::sort(s.m.begin(), s.m.end());
        std::sort(s.n.begin(), s.n.end());
        out.push_back(std::move(s));
    };

    auto dfs = [&](auto&& self, int i) -> void {
        if (i == count) {
            ++tested;
            if (delta1 == 0 && delta2 == 0 && size_m >= 1 && size_n >= 1) {
                ++surviving;
                emit();
            }
            return;
        }
        const int remaining = count - i;
        if (delta1 > 0 || delta2 > 0) return;
        if (delta1 + remaining < 0 || delta2 + remaining < 0) return;
        const MultiEdge* eg = g.find_edge(free_ids[i]);
        const MultiEdge* eh = h.find_edge(free_ids[i]);
        const int gu = vertex_index(g, eg->u), gv = vertex_index(g, eg->v);
        const int hu = vertex_index(h, eh->u), hv = vertex_index(h, eh->v);

        // branch: biedge joins M'
        {
            int da = span_g_m.unite(gu, gv) ? 1 : 0;
            int dc = span_g_mprime.unite(gu, gv) ? 1 : 0;
            delta1 += da;
            delta2 += 1 - dc;
            side[i] = 0;
            ++size_m;
            self(self, i + 1);
            --size_m;
            delta2 -= 1 - dc;
            delta1 -= da;
            span_g_mprime.undo();
            span_g_m.undo();
        }
        // branch: biedge joins N'
        {
            int db = span_h_n.unite(hu, hv) ? 1 : 0;
            int dd = span_h_nprime.unite(hu, hv) ? 1 : 0;
            delta2 += db;
            delta1 += 1 - dd;
            side[i] = 1;
            ++size_n;
            self(self, i + 1);
            --size_n;
            delta1 -= 1 - dd;
            delta2 -= db;
            span_h_nprime.undo();
            span_h_n.undo();
        }
        side[i] = -1;
    };
    dfs(dfs, 0);

    if (stats != nullptr) {
        stats->splits_enumerated += tested;
        stats->splits_surviving += surviving;
    }
    return out;
}

namespace {

// Two biedges with the same endpoints in both graphs force generically
// inconsistent equations, so the count is zero.
bool has_coincident_biedge_pair(const Bigraph& b) {
    using Quad = std::tuple<VertexId, VertexId, VertexId, VertexId>;
    std::vector<Quad> quads;
    quads.reserve(b.biedge_count());
    const Multigraph& g = b.left();
    const Multigraph& h = b.right();
    for (const MultiEdge& eg : g.edges()) {
        const MultiEdge* eh = h.find_edge(eg.id);
        quads.emplace_back(std::min(eg.u, eg.v), std::max(eg.u, eg.v),
                           std::min(eh->u, eh->v), std::max(eh->u, eh->v));
    }
    std::sort(quads.begin(), quads.end());
    return std::adjacent_find(quads.begin(), quads.end()) != quads.end();
}

} // namespace

LamanEngine::LamanEngine(EngineOptions opts) : opts_(std::move(opts)) {}

RecursionStats LamanEngine::stats() const {
    RecursionStats s;
    s.nodes = nodes_.load();
    s.cache_hits = cache_.hits();
    s.splits_enumerated = splits_enum_.load();
    s.splits_surviving = splits_ok_.load();
    s.non_pseudo_laman_unary = non_pl_unary_.load();
    s.elapsed_ms = elapsed_ms_;
    return s;
}

void LamanEngine::reset_stats() {
    nodes_.store(0);
    splits_enum_.store(0);
    splits_ok_.store(0);
    non_pl_unary_.store(0);
    elapsed_ms_ = 0.0;
}

std::uint64_t LamanEngine::laman_number(const Bigraph& b) { return run(b, std::nullopt); }

std::uint64_t LamanEngine::laman_number_with_root_pivot(const Bigraph& b, EdgeId pivot) {
    return run(b, pivot);
}

std::uint64_t LamanEngine::laman_number_graph(const SimpleGraph& g) {
    if (!is_laman(g)) throw NotLamanError("graph is not Laman");
    return laman_number(doubled_bigraph(g));
}

std::uint64_t LamanEngine::run(const Bigraph& b, std::optional<EdgeId> root_pivot) {
    Bigraph nb = normalize(b);
    if (!is_pseudo_laman(nb)) throw InputError("bigraph is not pseudo-Laman");
    if (root_pivot && nb.left().find_edge(*root_pivot) == nullptr)
        throw InputError("root pivot is not a biedge of the bigraph");

    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t result = 0;
#ifdef _OPENMP
    if (opts_.jobs > 1) {
        std::exception_ptr err;
#pragma omp parallel num_threads(opts_.jobs)
#pragma omp single
        {
            try {
                result = recurse(nb, 0, root_pivot);
            } catch (...) {
                err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        result = recurse(nb, 0, root_pivot);
    }
#else
    result = recurse(nb, 0, root_pivot);
#endif
    const auto t1 = std::chrono::steady_clock::now();
    elapsed_ms_ += std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

// pre: b normalized and pseudo-Laman.
std::uint64_t LamanEngine::recurse(const Bigraph& b, int depth,
                                   std::optional<EdgeId> forced_pivot) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    if (opts_.trace) opts_.trace(b);

    if (b.left().has_self_loop() || b.right().has_self_loop()) return 0;
    if (b.biedge_count() == 1) return 1; // proper on both sides, the only remaining case
    if (opts_.early_zero && has_coincident_biedge_pair(b)) return 0;

    const CanonicalKey key = canonical_key(b);
    std::uint64_t cached;
    if (cache_.lookup(key, cached)) return cached;

    const EdgeId pivot = forced_pivot ? *forced_pivot : choose_pivot(b, opts_.pivot_strategy);
    const std::uint64_t value = expand(b, depth, pivot);
    cache_.insert(key, value);
    return value;
}

std::uint64_t LamanEngine::expand(const Bigraph& b, int depth, EdgeId pivot) {
    std::vector<EdgeId> pv{pivot};
    RecursionStats local;
    std::vector<Split> splits = enumerate_splits(b, pivot, &local);
    splits_enum_.fetch_add(local.splits_enumerated, std::memory_order_relaxed);
    splits_ok_.fetch_add(local.splits_surviving, std::memory_order_relaxed);

    // Children, all normalized: up to two from contracting/deleting the pivot
    // alone, then a product pair per split. Non-pseudo-Laman pivot children
    // contribute zero terms; they are dropped here and tallied for audit.
    std::vector<Bigraph> kids;
    kids.reserve(2 + 2 * splits.size());
    std::size_t unary_count = 0;
    for (Bigraph child : {normalize(left_quot(b, pv)), normalize(right_quot(b, pv))}) {
        if (is_pseudo_laman(child)) {
            kids.push_back(std::move(child));
            ++unary_count;
        } else {
            non_pl_unary_.fetch_add(1, std::memory_order_relaxed);
        }
    }
    for (const Split& s : splits) {
        kids.push_back(normalize(left_quot(b, s.m)));
        kids.push_back(normalize(right_quot(b, s.n)));
    }

    std::vector<std::uint64_t> vals(kids.size(), 0);
    bool parallel_here = false;
#ifdef _OPENMP
    parallel_here = opts_.jobs > 1 && depth < 2 && kids.size() > 1 && omp_in_parallel();
#endif
    if (parallel_here) {
#ifdef _OPENMP
        std::vector<std::exception_ptr> errs(kids.size());
#pragma omp taskloop grainsize(1) shared(kids, vals, errs)
        for (std::size_t i = 0; i < kids.size(); ++i) {
            try {
                vals[i] = recurse(kids[i], depth + 1, std::nullopt);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
        for (const std::exception_ptr& e : errs)
            if (e) std::rethrow_exception(e);
#endif
    } else {
        for (std::size_t i = 0; i < kids.size(); ++i)
            vals[i] = recurse(kids[i], depth + 1, std::nullopt);
    }

    std::uint64_t total = 0;
    for (std::size_t i = 0; i < unary_count; ++i) total = checked_add(total, vals[i]);
    for (std::size_t s = 0; s < splits.size(); ++s)
        total = checked_add(total,
                            checked_mul(vals[unary_count + 2 * s], vals[unary_count + 2 * s + 1]));
    return total;
}

} // namespace laman
