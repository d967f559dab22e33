#pragma once

#include <cstdint>

#include "cubicver/errors.hpp"

namespace cubicver {

// Element of F_p for an odd prime p < 2^62. The modulus travels with the
// value so that mixing moduli inside one matrix is detectable (InvalidInput)
// instead of silently wrong.
struct Fp {
    std::uint64_t v = 0; // canonical representative in [0, p)
    std::uint64_t p = 0; // 0 means "unset" (only for default-constructed zeros)

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin, exact for all 64-bit inputs (fixed witness set).
bool is_prime_u64(std::uint64_t n);

Fp fp_add(Fp a, Fp b);
Fp fp_sub(Fp a, Fp b);
Fp fp_mul(Fp a, Fp b);
Fp fp_inv(Fp a);

} // namespace cubicver
