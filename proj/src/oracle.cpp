#include "laman/oracle.hpp"

#include <algorithm>
#include <array>
#include <exception>

#include "laman/errors.hpp"
#include "laman/rigidity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laman {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Labeling random_labeling(const SimpleGraph& g, const PrimeField& field, std::uint64_t seed,
                         std::uint64_t trial) {
    std::uint64_t state = seed ^ (0xa0761d6478bd642full * (trial + 1));
    Labeling lam;
    lam.values.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        lam.values.push_back(1 + std::uint32_t(splitmix64(state) % (field.p() - 1)));
    return lam;
}

PolySystem build_system(const SimpleGraph& g, const Labeling& lam, VertexId base, VertexId anchor,
                        const PrimeField& field) {
    if (base == anchor || !g.has_edge(base, anchor))
        throw InputError("base and anchor must span an edge");
    if (lam.values.size() != g.edge_count())
        throw InputError("labeling does not match the edge list");
    for (std::uint32_t v : lam.values)
        if (v % field.p() == 0) throw InputError("labels must be nonzero");

    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    if (2 * n - 3 > kMaxVars) throw InputError("too many vertices for the dense system");

    // variable layout: x_v for v not in {base, anchor}, then y_v for v != base
    std::vector<int> x_var(n, -1), y_var(n, -1);
    auto pos = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    int next = 0;
    for (int i = 0; i < n; ++i)
        if (vs[i] != base && vs[i] != anchor) x_var[i] = next++;
    for (int i = 0; i < n; ++i)
        if (vs[i] != base) y_var[i] = next++;

    // x side of a vertex as a tiny polynomial: 0 at base, 1 at anchor
    auto x_poly = [&](VertexId v) {
        if (v == base) return Polynomial();
        if (v == anchor) return constant_poly(1, field);
        return var_poly(x_var[pos(v)], field);
    };
    auto y_poly = [&](VertexId v) {
        if (v == base) return Polynomial();
        return var_poly(y_var[pos(v)], field);
    };

    PolySystem sys{field, next, {}};
    sys.polys.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        Polynomial dx = poly_sub(x_poly(u), x_poly(v), field);
        Polynomial dy = poly_sub(y_poly(u), y_poly(v), field);
        Polynomial eq = poly_sub(poly_mul(dx, dy, field),
                                 constant_poly(lam.values[i] % field.p(), field), field);
        sys.polys.push_back(std::move(eq));
    }
    return sys;
}

std::optional<std::uint64_t> count_solutions(const PolySystem& sys, const GroebnerOptions& opts) {
    std::vector<Polynomial> basis = groebner_basis(sys.polys, sys.field, opts);
    return standard_monomial_count(basis, sys.nvars);
}

std::uint64_t oracle_laman_number(const SimpleGraph& g, std::uint64_t seed,
                                  const OracleOptions& opts) {
    if (!is_laman(g)) throw NotLamanError("oracle input is not a Laman graph");
    if (g.vertex_count() > 7) throw InputError("oracle supports at most 7 vertices");

    const PrimeField field(opts.prime);
    const auto [base, anchor] = g.edges().front();

    for (int round = 0; round < opts.max_rounds; ++round) {
        std::array<std::optional<std::uint64_t>, 3> counts;
        std::array<std::exception_ptr, 3> errs;
        auto one_trial = [&](int t) {
            try {
                Labeling lam = random_labeling(g, field, seed, std::uint64_t(3 * round + t));
                counts[t] = count_solutions(build_system(g, lam, base, anchor, field),
                                            opts.groebner);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        };
#ifdef _OPENMP
        if (opts.jobs > 1) {
#pragma omp parallel for num_threads(std::min(opts.jobs, 3)) schedule(static)
            for (int t = 0; t < 3; ++t) one_trial(t);
        } else
#endif
        {
            for (int t = 0; t < 3; ++t) one_trial(t);
        }
        for (const std::exception_ptr& e : errs)
            if (e) std::rethrow_exception(e);
        if (counts[0] && counts[0] == counts[1] && counts[1] == counts[2]) return *counts[0];
    }
    throw InconclusiveError("oracle trials did not reach agreement");
}

} // namespace laman
