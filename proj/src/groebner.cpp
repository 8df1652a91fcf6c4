#include "laman/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "laman/errors.hpp"

namespace laman {

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& gens) {
    for (const Polynomial& g : gens)
        if (!g.is_zero() && mono_divides(g.lt().m, m)) return &g;
    return nullptr;
}

Polynomial drop_lt(const Polynomial& p) {
    return Polynomial::from_sorted({p.terms().begin() + 1, p.terms().end()});
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& field) {
    Monomial l = mono_lcm(f.lt().m, g.lt().m);
    Term tf{g.lt().c, mono_div(l, f.lt().m)};
    Term tg{f.lt().c, mono_div(l, g.lt().m)};
    return poly_sub(term_mul(tf, f, field), term_mul(tg, g, field), field);
}

// Reduce only while the leading term is divisible; cheaper than a full normal
// form and sufficient for basis construction.
Polynomial top_reduce(Polynomial work, const std::vector<Polynomial>& gens,
                      const PrimeField& field) {
    while (!work.is_zero()) {
        const Polynomial* reducer = find_reducer(work.lt().m, gens);
        if (reducer == nullptr) break;
        Term q{field.mul(work.lt().c, field.inv(reducer->lt().c)),
               mono_div(work.lt().m, reducer->lt().m)};
        work = poly_sub(work, term_mul(q, *reducer, field), field);
    }
    return work;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const PrimeField& field) {
    std::vector<Term> remainder;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Polynomial* reducer = find_reducer(work.lt().m, gens);
        if (reducer == nullptr) {
            remainder.push_back(work.lt());
            work = drop_lt(work);
            continue;
        }
        Term q{field.mul(work.lt().c, field.inv(reducer->lt().c)),
               mono_div(work.lt().m, reducer->lt().m)};
        work = poly_sub(work, term_mul(q, *reducer, field), field);
    }
    return Polynomial::from_sorted(std::move(remainder));
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PrimeField& field,
                                       const GroebnerOptions& opts) {
    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g, field));

    struct Pair {
        std::size_t i, j; // i < j
        Monomial lcm;
        int deg;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;

    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(basis[i].lt().m, basis[j].lt().m);
            pending.push_back({i, j, l, l.degree()});
            pending_keys.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

    auto still_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pending_keys.count({a, b}) != 0;
    };

    std::uint64_t processed = 0;
    while (!pending.empty()) {
        if (++processed > opts.max_pairs)
            throw ResourceError("pair budget exhausted in basis computation");

        // normal selection: smallest lcm in the term order
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (grevlex_less(pending[k].lcm, pending[best].lcm)) best = k;
        Pair pr = pending[best];
        pending[best] = pending.back();
        pending.pop_back();
        pending_keys.erase({pr.i, pr.j});

        // product criterion: coprime leading monomials reduce to zero
        bool coprime = true;
        for (int v = 0; v < kMaxVars && coprime; ++v)
            if (basis[pr.i].lt().m.e[v] > 0 && basis[pr.j].lt().m.e[v] > 0) coprime = false;
        if (coprime) continue;

        // chain criterion: some k with lt(k) | lcm and both mixed pairs done
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (mono_divides(basis[k].lt().m, pr.lcm) && !still_pending(pr.i, k) &&
                !still_pending(pr.j, k))
                skip = true;
        }
        if (skip) continue;

        Polynomial h = top_reduce(s_polynomial(basis[pr.i], basis[pr.j], field), basis, field);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(h, field));
        push_pairs_with(basis.size() - 1);
    }

    // prune members whose leading monomial another member's divides
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
            if (j != i && mono_divides(basis[j].lt().m, basis[i].lt().m) &&
                !(mono_divides(basis[i].lt().m, basis[j].lt().m) && j > i))
                redundant = true;
        if (!redundant) reduced.push_back(basis[i]);
    }
    return reduced;
}

bool is_zero_dimensional(const std::vector<Polynomial>& basis, int nvars) {
    for (const Polynomial& g : basis)
        if (!g.is_zero() && g.lt().m.is_one()) return true; // ideal is the whole ring
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            const Monomial& m = g.lt().m;
            if (m.e[v] == 0) continue;
            bool pure = true;
            for (int i = 0; i < kMaxVars && pure; ++i)
                if (i != v && m.e[i] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::optional<std::uint64_t> standard_monomial_count(const std::vector<Polynomial>& basis,
                                                     int nvars) {
    if (!is_zero_dimensional(basis, nvars)) return std::nullopt;
    std::vector<Monomial> leads;
    for (const Polynomial& g : basis)
        if (!g.is_zero()) leads.push_back(g.lt().m);

    auto blocked = [&](const Monomial& m) {
        for (const Monomial& l : leads)
            if (mono_divides(l, m)) return true;
        return false;
    };

    // Standard monomials form an order ideal, so a DFS that only extends
    // standard monomials (with nondecreasing variable index, for a unique
    // path to each) visits each exactly once.
    std::uint64_t count = 0;
    auto dfs = [&](auto&& self, const Monomial& m, int from) -> void {
        if (blocked(m)) return;
        ++count;
        for (int v = from; v < nvars; ++v) self(self, mono_mul(m, mono_var(v)), v);
    };
    dfs(dfs, Monomial{}, 0);
    return count;
}

} // namespace laman
