#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "laman/poly.hpp"

namespace laman {

struct GroebnerOptions {
    std::uint64_t max_pairs = 2000000; // processed S-pairs before giving up
};

// Full reduction of f modulo gens: no term of the result is divisible by any
// leading monomial of gens.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const PrimeField& field);

// Buchberger with normal (minimal-lcm) pair selection and the product and
// chain criteria; output is monic. Throws ResourceError past the pair budget.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PrimeField& field,
                                       const GroebnerOptions& opts = {});

// pre: basis is a Groebner basis. True iff every active variable's pure power
// appears among the leading monomials.
bool is_zero_dimensional(const std::vector<Polynomial>& basis, int nvars);

// Number of monomials outside the leading-term ideal; nullopt when the ideal
// is not zero-dimensional. pre: basis is a Groebner basis.
std::optional<std::uint64_t> standard_monomial_count(const std::vector<Polynomial>& basis,
                                                     int nvars);

} // namespace laman
