#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace laman {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]]; // path halving
            x = parent_[x];
        }
        return x;
    }

    // Returns true when two distinct classes were merged.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

// Union by size without path compression so unions can be undone in LIFO
// order; used by the split-enumeration backtracking.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns true when two distinct classes were merged (records an undo
    // entry either way, so every unite() pairs with one undo()).
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            log_.push_back(kNoop);
            return false;
        }
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        log_.push_back(b);
        return true;
    }

    void undo() {
        std::uint32_t b = log_.back();
        log_.pop_back();
        if (b == kNoop) return;
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    static constexpr std::uint32_t kNoop = 0xffffffffu;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> log_;
};

} // namespace laman
