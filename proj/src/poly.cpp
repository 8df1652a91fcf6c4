#include "laman/poly.hpp"

#include <algorithm>

#include "laman/errors.hpp"

namespace laman {

bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 255) throw ResourceError("monomial exponent exceeds representation");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial mono_var(int i) {
    if (i < 0 || i >= kMaxVars) throw InputError("variable index out of range");
    Monomial r;
    r.e[i] = 1;
    return r;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const PrimeField& f) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_less(b.m, a.m); });
    Polynomial p;
    for (const Term& t : terms) {
        std::uint32_t c = t.c % f.p();
        if (c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c = f.add(p.terms_.back().c, c);
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back({c, t.m});
        }
    }
    return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
    Polynomial r;
    r.terms_.reserve(a.terms().size() + b.terms().size());
    std::size_t i = 0, j = 0;
    while (i < a.terms().size() && j < b.terms().size()) {
        const Term& ta = a.terms()[i];
        const Term& tb = b.terms()[j];
        if (ta.m == tb.m) {
            std::uint32_t c = f.add(ta.c, tb.c);
            if (c != 0) r.terms_.push_back({c, ta.m});
            ++i, ++j;
        } else if (grevlex_less(tb.m, ta.m)) {
            r.terms_.push_back(ta);
            ++i;
        } else {
            r.terms_.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms().size(); ++i) r.terms_.push_back(a.terms()[i]);
    for (; j < b.terms().size(); ++j) r.terms_.push_back(b.terms()[j]);
    return r;
}

Polynomial poly_scale(const Polynomial& a, std::uint32_t c, const PrimeField& f) {
    return term_mul({c, Monomial{}}, a, f);
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
    return poly_add(a, poly_scale(b, f.p() - 1, f), f);
}

Polynomial term_mul(const Term& t, const Polynomial& a, const PrimeField& f) {
    Polynomial r;
    std::uint32_t c = t.c % f.p();
    if (c == 0) return r;
    r.terms_.reserve(a.terms().size());
    for (const Term& ta : a.terms()) {
        std::uint32_t rc = f.mul(c, ta.c);
        if (rc != 0) r.terms_.push_back({rc, mono_mul(t.m, ta.m)});
    }
    return r; // multiplying by one monomial preserves the grevlex order
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
    Polynomial r;
    for (const Term& t : a.terms()) r = poly_add(r, term_mul(t, b, f), f);
    return r;
}

Polynomial make_monic(const Polynomial& a, const PrimeField& f) {
    if (a.is_zero() || a.lt().c == 1) return a;
    return poly_scale(a, f.inv(a.lt().c), f);
}

Polynomial constant_poly(std::uint32_t c, const PrimeField& f) {
    return Polynomial::from_terms({{c, Monomial{}}}, f);
}

Polynomial var_poly(int i, const PrimeField& f) {
    return Polynomial::from_terms({{1, mono_var(i)}}, f);
}

} // namespace laman
