#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laman/groebner.hpp"
#include "laman/modp.hpp"
#include "laman/poly.hpp"
#include "laman/simple_graph.hpp"

namespace laman {

// Nonzero squared-length stand-ins, aligned with g.edges() order.
struct Labeling {
    std::vector<std::uint32_t> values;
};

Labeling random_labeling(const SimpleGraph& g, const PrimeField& field, std::uint64_t seed,
                         std::uint64_t trial);

// The realization system after fixing translations (base vertex at the
// origin) and the residual scaling action (x coordinate of anchor set to 1):
// one equation (x_u - x_v)(y_u - y_v) - lambda_uv per edge, in the
// 2|V|-3 variables [x_v : v not in {base, anchor}] ++ [y_v : v != base].
struct PolySystem {
    PrimeField field;
    int nvars = 0;
    std::vector<Polynomial> polys;
};

PolySystem build_system(const SimpleGraph& g, const Labeling& lam, VertexId base, VertexId anchor,
                        const PrimeField& field);

// Standard-monomial count of the system's ideal; nullopt when not
// zero-dimensional (degenerate labels).
std::optional<std::uint64_t> count_solutions(const PolySystem& sys,
                                             const GroebnerOptions& opts = {});

struct OracleOptions {
    std::uint32_t prime = kDefaultPrime;
    int jobs = 1;       // trials of one round may run concurrently
    int max_rounds = 5; // rounds of 3 trials before giving up
    GroebnerOptions groebner;
};

// Solution count agreed on by 3 independently labeled trials; rounds are
// redrawn on disagreement or degeneracy. Throws InconclusiveError when the
// round cap is exhausted, never returns a disputed number.
std::uint64_t oracle_laman_number(const SimpleGraph& g, std::uint64_t seed,
                                  const OracleOptions& opts = {});

} // namespace laman
