#pragma once

#include <cstdint>

namespace laman {

// Fixed prime just below 2^31 so products of residues fit in 64 bits.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

// Arithmetic in Z/p for a prime p > 2^20. Elements are plain uint32_t
// residues in [0, p); the field object carries the modulus.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? std::uint32_t(s - p_) : std::uint32_t(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p_) - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t(std::uint64_t(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const; // error on a == 0

    // Reduce an arbitrary signed integer into [0, p).
    std::uint32_t from_int(long long v) const;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

} // namespace laman
