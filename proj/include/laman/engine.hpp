#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "laman/bigraph.hpp"
#include "laman/canonical.hpp"
#include "laman/simple_graph.hpp"

namespace laman {

// Checked 64-bit arithmetic; throws OverflowError instead of wrapping.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

// A recursion step around a pivot biedge: m and n cover the biedges, share
// exactly the pivot, and both have at least two elements.
struct Split {
    std::vector<EdgeId> m, n;
    EdgeId pivot;
};

enum class PivotStrategy {
    MaxDegree, // biedge at a maximum-degree left vertex
    First,     // smallest biedge id
};

struct RecursionStats {
    std::uint64_t nodes = 0;             // recursion entries
    std::uint64_t cache_hits = 0;
    std::uint64_t splits_enumerated = 0; // complete candidate assignments tested
    std::uint64_t splits_surviving = 0;  // candidates passing all side conditions
    std::uint64_t non_pseudo_laman_unary = 0; // unary terms skipped as 0 (audit trail)
    double elapsed_ms = 0.0;
};

// Key -> value map shared by all recursion nodes. Concurrent inserts of the
// same key always carry equal values; a rebind with a different value means
// the canonical key is broken and throws.
class MemoCache {
public:
    bool lookup(const CanonicalKey& key, std::uint64_t& out);
    void insert(const CanonicalKey& key, std::uint64_t value);
    std::size_t size() const;
    std::uint64_t hits() const { return hits_.load(); }
    std::uint64_t misses() const { return misses_.load(); }
    void clear();

private:
    static constexpr std::size_t kShards = 16;
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<CanonicalKey, std::uint64_t> map;
    };
    Shard& shard_for(const CanonicalKey& key);
    std::array<Shard, kShards> shards_;
    std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

struct EngineOptions {
    PivotStrategy pivot_strategy = PivotStrategy::MaxDegree;
    bool early_zero = true; // coincident biedge pairs short-circuit to 0
    int jobs = 1;           // >1 evaluates split terms with OpenMP tasks
    std::function<void(const Bigraph&)> trace; // sees every recursion node (normalized)
};

// Deterministic pivot choice; never affects the computed number.
EdgeId choose_pivot(const Bigraph& b, PivotStrategy strategy = PivotStrategy::MaxDegree);

// All valid splits around `pivot`, in lexicographic order of the
// biedge-membership bitmask. Candidate assignments are pruned with running
// dimension bounds; stats (when given) records tested/surviving counts.
std::vector<Split> enumerate_splits(const Bigraph& b, EdgeId pivot,
                                    RecursionStats* stats = nullptr);

class LamanEngine {
public:
    explicit LamanEngine(EngineOptions opts = {});

    // Number of solutions counted by the bigraph recursion.
    // pre: b is pseudo-Laman after normalization.
    std::uint64_t laman_number(const Bigraph& b);

    // Same, with the pivot forced at the root step only.
    std::uint64_t laman_number_with_root_pivot(const Bigraph& b, EdgeId pivot);

    // Count for a Laman graph via its doubled bigraph. pre: is_laman(g).
    std::uint64_t laman_number_graph(const SimpleGraph& g);

    RecursionStats stats() const;
    void reset_stats();
    MemoCache& cache() { return cache_; }
    const EngineOptions& options() const { return opts_; }

private:
    std::uint64_t run(const Bigraph& b, std::optional<EdgeId> root_pivot);
    std::uint64_t recurse(const Bigraph& b, int depth, std::optional<EdgeId> forced_pivot);
    std::uint64_t expand(const Bigraph& b, int depth, EdgeId pivot);

    EngineOptions opts_;
    MemoCache cache_;
    std::atomic<std::uint64_t> nodes_{0}, splits_enum_{0}, splits_ok_{0}, non_pl_unary_{0};
    double elapsed_ms_ = 0.0;
};

} // namespace laman
