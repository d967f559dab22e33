#pragma once

#include <gmpxx.h>

#include <string>

#include "cubicver/errors.hpp"

namespace cubicver {

// Exact arithmetic lives on GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as they are built through arithmetic
// or through the helpers below -- raw mpq_class(num, den) construction does
// NOT canonicalize, so always go through rat_of().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_of(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw InvalidInput("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_of(long num, long den = 1) {
    return rat_of(Int(num), Int(den));
}

// Parses "a" or "a/b" with optional leading minus, arbitrary precision.
Rat rat_from_string(const std::string& s);

// Canonical form: "a" when the denominator is one, else "a/b".
std::string rat_to_string(const Rat& q);

std::string int_to_string(const Int& z);

} // namespace cubicver
