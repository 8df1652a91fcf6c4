#include "laman/modp.hpp"

#include "laman/errors.hpp"

namespace laman {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p <= (1u << 20)) throw InputError("field modulus must exceed 2^20");
    if (!is_prime(p)) throw InputError("field modulus is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a % p_;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw InputError("division by zero in prime field");
    return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

} // namespace laman
