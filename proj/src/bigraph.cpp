#include "laman/bigraph.hpp"

#include "laman/errors.hpp"

namespace laman {

Bigraph::Bigraph(Multigraph left, Multigraph right)
    : left_(std::move(left)), right_(std::move(right)) {
    if (left_.edge_ids() != right_.edge_ids())
        throw InputError("bigraph sides disagree on the biedge set");
}

Bigraph left_quot(const Bigraph& b, std::span<const EdgeId> m) {
    return Bigraph(quotient(b.left(), m), complement(b.right(), m));
}

Bigraph right_quot(const Bigraph& b, std::span<const EdgeId> m) {
    return Bigraph(complement(b.left(), m), quotient(b.right(), m));
}

bool is_pseudo_laman(const Bigraph& b) {
    return dim(b.left()) + dim(b.right()) == static_cast<int>(b.biedge_count()) + 1;
}

Bigraph normalize(const Bigraph& b) {
    // complement with an empty edge set deletes nothing and drops exactly
    // the isolated vertices.
    return Bigraph(complement(b.left(), {}), complement(b.right(), {}));
}

Bigraph swapped(const Bigraph& b) {
    return Bigraph(b.right(), b.left());
}

} // namespace laman
