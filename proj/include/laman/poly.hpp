#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "laman/modp.hpp"

namespace laman {

// Dense exponent vectors: enough room for 2*7-3 = 11 variables plus slack.
inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    int degree() const {
        int d = 0;
        for (std::uint8_t x : e) d += x;
        return d;
    }
    bool operator==(const Monomial&) const = default;
    bool is_one() const { return degree() == 0; }
};

// Graded reverse lexicographic order. Unused variable slots are zero in both
// arguments, so comparing all kMaxVars slots is equivalent to comparing the
// active prefix.
bool grevlex_less(const Monomial& a, const Monomial& b);

bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b); // error past exponent 255
Monomial mono_div(const Monomial& b, const Monomial& a); // pre: mono_divides(a, b)
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_var(int i); // x_i

struct Term {
    std::uint32_t c = 0;
    Monomial m;

    friend bool operator==(const Term&, const Term&) = default;
};

// Terms sorted descending in grevlex, monomials unique, coefficients nonzero.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial from_terms(std::vector<Term> terms, const PrimeField& f);
    // pre: already sorted descending, unique monomials, coefficients in (0, p)
    static Polynomial from_sorted(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    const Term& lt() const { return terms_.front(); } // pre: !is_zero()
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
    friend Polynomial poly_add(const Polynomial&, const Polynomial&, const PrimeField&);
    friend Polynomial term_mul(const Term&, const Polynomial&, const PrimeField&);
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PrimeField& f);
Polynomial term_mul(const Term& t, const Polynomial& a, const PrimeField& f);
Polynomial poly_scale(const Polynomial& a, std::uint32_t c, const PrimeField& f);
Polynomial make_monic(const Polynomial& a, const PrimeField& f);
Polynomial constant_poly(std::uint32_t c, const PrimeField& f);
Polynomial var_poly(int i, const PrimeField& f); // x_i with coefficient 1

} // namespace laman
