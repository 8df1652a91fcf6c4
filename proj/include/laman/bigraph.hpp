#pragma once

#include "laman/multigraph.hpp"

namespace laman {

// Two multigraphs sharing one set of biedge identifiers. The vertex
// namespaces of the two sides are unrelated; only edge ids are shared.
class Bigraph {
public:
    Bigraph() = default;
    // Validates that both sides carry exactly the same edge ids.
    Bigraph(Multigraph left, Multigraph right);

    const Multigraph& left() const { return left_; }
    const Multigraph& right() const { return right_; }
    std::vector<EdgeId> biedges() const { return left_.edge_ids(); }
    std::size_t biedge_count() const { return left_.edge_count(); }

    friend bool operator==(const Bigraph&, const Bigraph&) = default;

private:
    Multigraph left_, right_;
};

// (G / M, H \ M), biedges E \ M.
Bigraph left_quot(const Bigraph& b, std::span<const EdgeId> m);

// (G \ M, H / M), biedges E \ M.
Bigraph right_quot(const Bigraph& b, std::span<const EdgeId> m);

// dim(G) + dim(H) == |E| + 1.
bool is_pseudo_laman(const Bigraph& b);

// Drop vertices without incident edges on both sides. dim and the
// pseudo-Laman property are unaffected.
Bigraph normalize(const Bigraph& b);

// Exchange the two sides.
Bigraph swapped(const Bigraph& b);

} // namespace laman
