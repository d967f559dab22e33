#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubicver/polyring.hpp"

namespace cubicver {

// Unordered pair of indices into a basis, stored with a <= b.
struct Sym2Label {
    std::size_t a = 0, b = 0;
    bool operator==(const Sym2Label&) const = default;
};

// Oriented pair a < b; e_a ^ e_b with a < b is the positive basis vector.
struct Wedge2Label {
    std::size_t a = 0, b = 0;
    bool operator==(const Wedge2Label&) const = default;
};

// Lex-ordered enumerations of the two label families over an n-dim basis.
std::vector<Sym2Label> sym2_labels(std::size_t n);
std::vector<Wedge2Label> wedge2_labels(std::size_t n);
std::size_t sym2_index(std::size_t n, std::size_t a, std::size_t b);

// Coordinates of v ^ w in the wedge2 basis of the n-dim space containing v.
std::vector<Rat> wedge2_coords(const std::vector<Rat>& v, const std::vector<Rat>& w);

// The symmetrized cup-product matrix: 100 rows indexed by pairs
// (degree-1 wedge label, degree-4 wedge label), 55 columns indexed by
// Sym2 labels over the degree-3 standard basis. The column f.g evaluated on
// the row basis vector phi ^ psi is f*phi ^ g*psi + g*phi ^ f*psi, with all
// four products taken in the quotient ring.
RatMatrix build_nu(const JacobianRing& ring);
RatMatrix build_nu(const CubicForm& f);

std::size_t nu_rank(const JacobianRing& ring);
std::size_t nu_rank(const CubicForm& f);

// The value of the column {a,b} on the row wedge (t,u), as coordinates in
// the wedge2 basis of the degree-4 piece. Exposed so tests can probe the
// antisymmetry and symmetry of the defining formula directly.
std::vector<Rat> nu_value(const JacobianRing& ring, std::size_t a, std::size_t b, std::size_t t,
                          std::size_t u);

// The five explicit kernel vectors of the Fermat cup-product matrix: for
// each i, the sum of the three products x_I * x_J over the unordered pairs
// of 3-subsets with I and J meeting exactly in {i}. Each vector is checked
// against the matrix and the five together are checked to span the kernel.
std::vector<std::vector<Rat>> fermat_kernel();

// One column block of the Fermat matrix per torus character: the five-tuple
// (d_I + d_J) mod 3, the columns carrying it, and the exact rank of that
// column submatrix. Blocks are ordered by first column occurrence, and the
// block ranks are checked to sum to the full rank.
struct CharacterBlock {
    std::array<std::uint8_t, 5> character{};
    std::vector<std::size_t> columns;
    std::size_t rank = 0;
};
std::vector<CharacterBlock> fermat_character_blocks();

// Degree-d section count on the Plucker-embedded Grassmannian G(2,5),
// computed two independent ways (tableau enumeration vs dimension count);
// they must agree or the call fails with InconsistentMethods.
std::size_t grassmannian_sections(unsigned d);

// Both raw method values, without the agreement assertion, for reporting.
struct SectionCounts {
    std::size_t tableaux = 0;
    std::size_t dimension_count = 0;
};
SectionCounts grassmannian_section_counts(unsigned d);

namespace detail {
// Test hook: override the tableau enumeration to force a method mismatch.
std::size_t grassmannian_sections_impl(unsigned d, std::optional<std::size_t> fake_enumeration);
} // namespace detail

} // namespace cubicver
