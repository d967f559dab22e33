#include "cubicver/cupmap.hpp"

#include <algorithm>

#include "cubicver/echelon.hpp"

namespace cubicver {

std::vector<Sym2Label> sym2_labels(std::size_t n) {
    std::vector<Sym2Label> out;
    out.reserve(n * (n + 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) out.push_back({a, b});
    return out;
}

std::vector<Wedge2Label> wedge2_labels(std::size_t n) {
    std::vector<Wedge2Label> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) out.push_back({a, b});
    return out;
}

std::size_t sym2_index(std::size_t n, std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (b >= n) throw InvalidInput("sym2 index out of range");
    // pairs (a,*) start after the a previous groups of sizes n, n-1, ...
    return a * n - a * (a - 1) / 2 + (b - a);
}

std::vector<Rat> wedge2_coords(const std::vector<Rat>& v, const std::vector<Rat>& w) {
    if (v.size() != w.size()) throw InvalidInput("wedge of vectors from different spaces");
    const std::size_t n = v.size();
    std::vector<Rat> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) out.push_back(v[a] * w[b] - v[b] * w[a]);
    return out;
}

namespace {

// products[a][t] = coordinates of (a-th degree-3 standard monomial) * x_t
// in the degree-4 standard basis.
std::vector<std::array<std::vector<Rat>, 5>> degree3_times_variable(const JacobianRing& ring) {
    const auto& b3 = ring.basis(3).standard_monomials;
    std::vector<std::array<std::vector<Rat>, 5>> out(b3.size());
    for (std::size_t a = 0; a < b3.size(); ++a) {
        for (std::size_t t = 0; t < 5; ++t) {
            Exps xt{};
            xt[t] = 1;
            TermMap prod;
            prod.emplace(mono_mul(b3[a], xt), Rat(1));
            out[a][t] = ring.element_from_terms(prod, 4).coords;
        }
    }
    return out;
}

std::vector<Rat> nu_value_from_products(const std::array<std::vector<Rat>, 5>& pa,
                                        const std::array<std::vector<Rat>, 5>& pb, std::size_t t,
                                        std::size_t u) {
    auto first = wedge2_coords(pa[t], pb[u]);
    const auto second = wedge2_coords(pb[t], pa[u]);
    for (std::size_t i = 0; i < first.size(); ++i) first[i] += second[i];
    return first;
}

} // namespace

std::vector<Rat> nu_value(const JacobianRing& ring, std::size_t a, std::size_t b, std::size_t t,
                          std::size_t u) {
    if (!ring.smooth()) throw NotSmooth("cup-product map needs a smooth form");
    const auto products = degree3_times_variable(ring);
    if (a >= products.size() || b >= products.size() || t >= 5 || u >= 5)
        throw InvalidInput("cup-product index out of range");
    // formal wedge: e_u ^ e_t = -(e_t ^ e_u), and equal slots give zero
    const std::size_t n4 = ring.basis(4).standard_monomials.size();
    if (t == u) return std::vector<Rat>(n4 * (n4 - 1) / 2, Rat(0));
    if (t > u) {
        auto v = nu_value_from_products(products[a], products[b], u, t);
        for (auto& x : v) x = -x;
        return v;
    }
    return nu_value_from_products(products[a], products[b], t, u);
}

RatMatrix build_nu(const JacobianRing& ring) {
    if (!ring.smooth()) throw NotSmooth("cup-product map needs a smooth form");
    const auto& b3 = ring.basis(3).standard_monomials;
    const auto& b4 = ring.basis(4).standard_monomials;
    const auto products = degree3_times_variable(ring);

    const auto r1_wedges = wedge2_labels(5);
    const auto r4_wedges = wedge2_labels(b4.size());
    const auto columns = sym2_labels(b3.size());

    std::vector<std::string> row_labels;
    row_labels.reserve(r1_wedges.size() * r4_wedges.size());
    std::vector<std::string> var_names;
    for (const auto& m : monomials_of_degree(1)) var_names.push_back(monomial_name(m));
    for (const auto& [t, u] : r1_wedges)
        for (const auto& [va, vb] : r4_wedges)
            row_labels.push_back(var_names[t] + " ^ " + var_names[u] + " | " +
                                 monomial_name(b4[va]) + " ^ " + monomial_name(b4[vb]));

    std::vector<std::string> col_labels;
    col_labels.reserve(columns.size());
    for (const auto& [a, b] : columns)
        col_labels.push_back(monomial_name(b3[a]) + "." + monomial_name(b3[b]));

    // computed one column at a time, written straight into the row-major layout
    std::vector<Rat> entries(row_labels.size() * col_labels.size(), Rat(0));
    const std::size_t ncols = col_labels.size();
    for (std::size_t col = 0; col < columns.size(); ++col) {
        const auto& [a, b] = columns[col];
        for (std::size_t tw = 0; tw < r1_wedges.size(); ++tw) {
            const auto vals =
                nu_value_from_products(products[a], products[b], r1_wedges[tw].a, r1_wedges[tw].b);
            for (std::size_t aw = 0; aw < r4_wedges.size(); ++aw)
                entries[(tw * r4_wedges.size() + aw) * ncols + col] = vals[aw];
        }
    }
    return RatMatrix(std::move(row_labels), std::move(col_labels), std::move(entries));
}

RatMatrix build_nu(const CubicForm& f) { return build_nu(JacobianRing(f)); }

std::size_t nu_rank(const JacobianRing& ring) { return echelonize(build_nu(ring)).rank; }

std::size_t nu_rank(const CubicForm& f) { return nu_rank(JacobianRing(f)); }

namespace {

bool subset_exps(const Exps& e, std::array<bool, 5>& out) {
    for (std::size_t i = 0; i < 5; ++i) {
        if (e[i] > 1) return false;
        out[i] = e[i] == 1;
    }
    return true;
}

} // namespace

std::vector<std::vector<Rat>> fermat_kernel() {
    JacobianRing ring(fermat_cubic());
    const auto& b3 = ring.basis(3).standard_monomials;
    const auto columns = sym2_labels(b3.size());
    const auto m = build_nu(ring);

    // index of the 3-subset monomial x_I within the standard basis
    auto subset_index = [&](std::array<bool, 5> members) {
        Exps e{};
        for (std::size_t i = 0; i < 5; ++i) e[i] = members[i] ? 1 : 0;
        for (std::size_t a = 0; a < b3.size(); ++a)
            if (b3[a] == e) return a;
        throw InconsistentMethods("Fermat degree-3 basis is missing a square-free monomial");
    };

    std::vector<std::vector<Rat>> kernel;
    for (std::size_t i = 0; i < 5; ++i) {
        std::array<std::size_t, 4> rest{};
        std::size_t k = 0;
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i) rest[k++] = j;

        std::vector<Rat> v(columns.size(), Rat(0));
        // the three splittings of the remaining four indices into two pairs
        const std::array<std::array<std::size_t, 4>, 3> splits = {{
            {rest[0], rest[1], rest[2], rest[3]},
            {rest[0], rest[2], rest[1], rest[3]},
            {rest[0], rest[3], rest[1], rest[2]},
        }};
        for (const auto& s : splits) {
            std::array<bool, 5> mi{}, mj{};
            mi[i] = mj[i] = true;
            mi[s[0]] = mi[s[1]] = true;
            mj[s[2]] = mj[s[3]] = true;
            v[sym2_index(b3.size(), subset_index(mi), subset_index(mj))] += 1;
        }
        for (const auto& c : mat_vec(m, v))
            if (sgn(c) != 0) throw InconsistentMethods("claimed Fermat kernel vector is not in the kernel");
        kernel.push_back(std::move(v));
    }

    if (detail::bareiss_rank(detail::integerize_rows(kernel), columns.size()) != 5)
        throw InconsistentMethods("Fermat kernel vectors are not independent");
    if (echelonize(m).rank + 5 != columns.size())
        throw InconsistentMethods("Fermat kernel vectors do not span the kernel");
    return kernel;
}

std::vector<CharacterBlock> fermat_character_blocks() {
    JacobianRing ring(fermat_cubic());
    const auto& b3 = ring.basis(3).standard_monomials;
    const auto columns = sym2_labels(b3.size());
    const auto m = build_nu(ring);

    std::vector<CharacterBlock> blocks;
    for (std::size_t col = 0; col < columns.size(); ++col) {
        std::array<std::uint8_t, 5> character{};
        const auto& ea = b3[columns[col].a];
        const auto& eb = b3[columns[col].b];
        for (std::size_t i = 0; i < 5; ++i)
            character[i] = static_cast<std::uint8_t>((ea[i] + eb[i]) % 3);
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const CharacterBlock& bl) { return bl.character == character; });
        if (it == blocks.end()) {
            blocks.push_back(CharacterBlock{character, {col}, 0});
        } else {
            it->columns.push_back(col);
        }
    }

    std::size_t total = 0;
    for (auto& block : blocks) {
        std::vector<std::vector<Rat>> cols;
        for (auto c : block.columns) {
            std::vector<Rat> col(m.rows());
            for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
            cols.push_back(std::move(col));
        }
        // rank of the column block = rank of its transpose
        block.rank = detail::bareiss_rank(detail::integerize_rows(cols), m.rows());
        total += block.rank;
    }
    if (total != echelonize(m).rank)
        throw InconsistentMethods("character blocks are not rank-orthogonal");
    return blocks;
}

namespace detail {

std::size_t grassmannian_sections_impl(unsigned d, std::optional<std::size_t> fake_enumeration) {
    SectionCounts counts = grassmannian_section_counts(d);
    if (fake_enumeration) counts.tableaux = *fake_enumeration;
    if (counts.tableaux != counts.dimension_count)
        throw InconsistentMethods("tableau count disagrees with the dimension count");
    return counts.tableaux;
}

} // namespace detail

SectionCounts grassmannian_section_counts(unsigned d) {
    if (d != 1 && d != 2) throw InvalidInput("section count implemented for degrees 1 and 2 only");

    // Method 1: semistandard Young tableaux with entries in {1..5}, shape
    // (1,1) for d=1 and (2,2) for d=2 (rows weakly, columns strictly
    // increasing).
    std::size_t tableaux = 0;
    if (d == 1) {
        for (int a = 1; a <= 5; ++a)
            for (int c = a + 1; c <= 5; ++c) ++tableaux;
    } else {
        for (int a = 1; a <= 5; ++a)
            for (int b = a; b <= 5; ++b)
                for (int c = a + 1; c <= 5; ++c)
                    for (int e = std::max(b + 1, c); e <= 5; ++e) ++tableaux;
    }

    // Method 2: plethysm bookkeeping in the Plucker coordinates. Degree 1 is
    // dim wedge2(C^5); degree 2 is dim Sym^2(wedge2 C^5) minus the single
    // Plucker relation space wedge4(C^5): 55 - 5.
    const std::size_t wedge2 = 10;
    const std::size_t dimension_count = d == 1 ? wedge2 : wedge2 * (wedge2 + 1) / 2 - 5;

    return SectionCounts{tableaux, dimension_count};
}

std::size_t grassmannian_sections(unsigned d) {
    return detail::grassmannian_sections_impl(d, std::nullopt);
}

} // namespace cubicver
