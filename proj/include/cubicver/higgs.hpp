#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cubicver/matrix.hpp"
#include "cubicver/random.hpp"

namespace cubicver {

// Finite model of an infinitesimal graded Higgs bundle: a graded space
// H = ⊕_p H^p (only nonzero grades stored) and, for each basis vector
// δ_i of the tangent space T, a field θ(δ_i) lowering the grade by one.
// theta[i][p] is the block H^p -> H^{p-1}; absent blocks are zero.
struct InfGradedHiggs {
    std::size_t t_dim = 0;
    std::map<int, std::size_t> grades;            // p -> dim H^p (all values >= 1)
    std::vector<std::map<int, RatMatrix>> theta;  // one block family per δ

    // Shape discipline: a block may only connect two stored grades and must
    // have dims (dim H^{p-1}) x (dim H^p). Throws InvalidInput.
    void validate() const;

    const RatMatrix* block(std::size_t delta, int p) const; // nullptr when zero
    std::size_t grade_dim(int p) const;                     // 0 when absent
};

// Exact pairwise commutation of the θ(δ_i) as maps H^p -> H^{p-2}.
bool check_commuting(const InfGradedHiggs& h);

// Multisets of size n over {0..n_vars-1} in lex order; the Sym^n basis.
std::vector<std::vector<std::size_t>> multisets(std::size_t n_vars, unsigned n);
std::string multiset_label(const std::vector<std::size_t>& m, const std::vector<std::string>& names);

// The n-th iterate Sym^n T -> ⊕_p Hom(H^p, H^{p-n}) as one matrix: columns
// are multisets δ_{i1}···δ_{in} (plain composition, no multinomial factor),
// rows are the entries of each surviving block, grade-ascending, row-major.
// Throws NotAHiggsField when the fields do not commute.
RatMatrix iterate_theta(const InfGradedHiggs& h, unsigned n);

// Serre-style dual: grade p of the dual has the dimension of grade d-p, and
// the dual field on grade p is the transpose of the block leaving grade
// d-p+1. Involution: dual_higgs(dual_higgs(h, d), d) reproduces h.
InfGradedHiggs dual_higgs(const InfGradedHiggs& h, int d);

// Blockwise direct sum; both summands must share t_dim. Coordinates of the
// first summand come first within every grade.
InfGradedHiggs direct_sum(const InfGradedHiggs& a, const InfGradedHiggs& b);

// The data a family over a base supplies: the ambient relative dimension d,
// the Kodaira-Spencer-style map kappa: T -> K, and mu: Sym^d K -> C.
struct CompatibilityContext {
    unsigned d = 1;
    RatMatrix kappa;
    RatMatrix mu;
};

// Sym^d of a linear map in the multiset bases (columns: multisets over the
// source, rows: multisets over the target).
RatMatrix sym_power_map(const RatMatrix& m, unsigned d);

// ker(mu ∘ Sym^d kappa) ⊆ ker(theta^∘d), checked vector by vector on an
// exact kernel basis.
bool is_compatible(const InfGradedHiggs& h, const CompatibilityContext& ctx);

// The unique c with c ∘ mu ∘ Sym^d kappa = theta^∘d, solved on a basis of
// im(mu). Requires kappa surjective (NotVersal otherwise: uniqueness fails)
// and a compatible pair (InvalidInput otherwise).
struct InducedC {
    RatMatrix map;                        // im-basis coordinates -> Hom entries
    RatMatrix image_basis;                // the chosen basis of im(mu), as columns
    std::vector<std::size_t> basis_cols;  // which columns of mu∘Sym^d kappa they are

    // Evaluate on an ambient vector that must lie in im(mu).
    std::vector<Rat> apply(const std::vector<Rat>& x) const;
};

InducedC induced_c(const InfGradedHiggs& h, const CompatibilityContext& ctx);

// Seeded fixtures for the self-test suite and the CLI.
//
// A chain of grades top..0 with the given dimensions where every θ(δ_i) is
// a scalar multiple of one shared random block family, hence commuting.
// scales_out, when given, receives the multiplier of each direction; a
// context whose mu row is the d-fold products of those scales is then
// compatible with the fixture by construction.
InfGradedHiggs random_scaled_chain(SplitMix64& rng, std::size_t t_dim,
                                   const std::vector<std::size_t>& dims,
                                   std::vector<long long>* scales_out = nullptr);
// Two grades H^1, H^0 with fully independent random blocks; commuting holds
// vacuously because any composition of two fields lands in grade -1 = 0.
InfGradedHiggs random_two_grade(SplitMix64& rng, std::size_t t_dim, std::size_t dim1,
                                std::size_t dim0);

} // namespace cubicver
