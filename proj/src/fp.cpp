#include "cubicver/fp.hpp"

namespace cubicver {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; the remainder chain stays in uint64_t (p can exceed
    // INT64_MAX) while the Bezout coefficients, bounded by p in magnitude,
    // live in a signed 128-bit lane.
    __int128 t = 0, newt = 1;
    std::uint64_t r = p, newr = a % p;
    while (newr != 0) {
        const std::uint64_t q = r / newr;
        const __int128 tmp_t = t - static_cast<__int128>(q) * newt;
        t = newt;
        newt = tmp_t;
        const std::uint64_t tmp_r = r - q * newr;
        r = newr;
        newr = tmp_r;
    }
    if (r != 1) throw InvalidInput("not invertible mod p");
    if (t < 0) t += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality exactly for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {
void check_same_field(Fp a, Fp b) {
    if (a.p != b.p) throw InvalidInput("mixed prime-field moduli in one operation");
}
} // namespace

Fp fp_add(Fp a, Fp b) {
    check_same_field(a, b);
    std::uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return Fp{s, a.p};
}

Fp fp_sub(Fp a, Fp b) {
    check_same_field(a, b);
    std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return Fp{s, a.p};
}

Fp fp_mul(Fp a, Fp b) {
    check_same_field(a, b);
    return Fp{mulmod(a.v, b.v, a.p), a.p};
}

Fp fp_inv(Fp a) {
    return Fp{invmod(a.v, a.p), a.p};
}

} // namespace cubicver
