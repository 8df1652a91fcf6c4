#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "laman/bigraph.hpp"

namespace laman {

// Isomorphism-complete fingerprint of a normalized bigraph: keys are equal
// exactly when the bigraphs are isomorphic (vertex bijections on both
// sides plus a biedge bijection preserving all incidences).
struct CanonicalKey {
    std::string bytes;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
    std::string hex() const;
};

// pre: b is normalized (no isolated vertices on either side).
CanonicalKey canonical_key(const Bigraph& b);

} // namespace laman

template <>
struct std::hash<laman::CanonicalKey> {
    std::size_t operator()(const laman::CanonicalKey& k) const noexcept {
        return std::hash<std::string>{}(k.bytes);
    }
};
