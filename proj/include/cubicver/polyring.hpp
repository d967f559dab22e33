#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicver/matrix.hpp"

#include "json.hpp"

namespace cubicver {

// Exponent tuple of a monomial in x0..x4.
using Exps = std::array<std::uint8_t, 5>;

unsigned degree_of(const Exps& e);
Exps mono_mul(const Exps& a, const Exps& b);
std::string monomial_name(const Exps& e);

// Canonical listing order: by total degree, then graded-lex with
// x0 > x1 > ... > x4, so x0^d comes first within each degree. Everything
// downstream (bases, pivots, serialization) inherits determinism from this.
struct MonoBefore {
    bool operator()(const Exps& a, const Exps& b) const;
};

// All C(d+4,4) monomials of total degree d, in listing order. Degrees are
// capped at 6: the ring is only ever examined up to its socle probe.
const std::vector<Exps>& monomials_of_degree(unsigned d);
std::size_t monomial_index(const Exps& e); // position within its own degree

using TermMap = std::map<Exps, Rat, MonoBefore>;

// A cubic form in five variables: degree-3 terms with nonzero coefficients.
struct CubicForm {
    TermMap terms;

    static CubicForm from_terms(TermMap t); // validates degrees, drops nothing
    bool operator==(const CubicForm&) const = default;
};

CubicForm fermat_cubic();

// Uniform integer coefficients in [-coeff_bound, coeff_bound] for all 35
// degree-3 monomials, drawn in listing order from one splitmix64 stream.
// The stream overload lets a sweep draw consecutive samples from a single
// seeded stream; random_cubic(seed, b) is sample 0 of that stream.
struct SplitMix64;
CubicForm random_cubic(SplitMix64& rng, long long coeff_bound);
CubicForm random_cubic(std::uint64_t seed, long long coeff_bound);

// The five partial derivatives, degree-2 term maps (possibly empty).
std::array<TermMap, 5> jacobian_generators(const CubicForm& f);

// JSON form: {"vars":5, "degree":3, "terms":[{"exps":[...], "coeff":"..."}]}
CubicForm cubic_from_json(const nlohmann::json& j);
nlohmann::json cubic_to_json(const CubicForm& f);

// Basis of one graded piece of the quotient ring: the standard monomials,
// plus the normal-form projection from the full monomial slice onto them.
struct QuotientBasis {
    unsigned degree = 0;
    std::vector<Exps> standard_monomials;
    RatMatrix reduce; // rows: standard monomials, cols: all monomials of this degree

    std::vector<Rat> apply(const std::vector<Rat>& full_coeffs) const;
};

struct RingElement {
    unsigned degree = 0;
    std::vector<Rat> coords; // in the standard-monomial basis of that degree

    bool operator==(const RingElement&) const = default;
};

// Graded pieces of C[x0..x4] modulo the Jacobian ideal of a cubic form.
// Quotient bases are computed lazily and cached; the object is immutable
// from the outside and safe to share across readers once warmed.
class JacobianRing {
public:
    explicit JacobianRing(CubicForm f);

    const CubicForm& form() const { return f_; }

    // 0 <= k <= 6. Standard monomials are the non-pivot columns of the
    // echelonized degree-k slice of the Jacobian ideal.
    const QuotientBasis& basis(unsigned k) const;

    std::array<std::size_t, 7> hilbert() const; // dim R_0 .. dim R_6
    bool smooth() const;                        // hilbert == (1,5,10,10,5,1,0)

    RingElement element_from_terms(const TermMap& terms, unsigned k) const;
    RingElement multiply(const RingElement& a, const RingElement& b) const;

    // Matrix of R_1 x R_4 -> R_5 in the standard bases; NotSmooth otherwise.
    RatMatrix pairing_r1_r4() const;

private:
    QuotientBasis compute_basis(unsigned k) const;
    QuotientBasis socle_probe_basis() const; // degree 6 via the degree-5 slice

    CubicForm f_;
    mutable std::array<std::optional<QuotientBasis>, 7> cache_;
};

} // namespace cubicver
