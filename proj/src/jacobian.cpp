#include "cubicver/echelon.hpp"
#include "cubicver/polyring.hpp"

namespace cubicver {

namespace {

std::vector<std::string> monomial_labels(unsigned d) {
    const auto& mons = monomials_of_degree(d);
    std::vector<std::string> out;
    out.reserve(mons.size());
    for (const auto& m : mons) out.push_back(monomial_name(m));
    return out;
}

std::vector<Rat> dense_from_terms(const TermMap& terms, unsigned d) {
    std::vector<Rat> out(monomials_of_degree(d).size(), Rat(0));
    for (const auto& [e, c] : terms) {
        if (degree_of(e) != d) throw InvalidInput("term degree does not match the graded piece");
        out[monomial_index(e)] += c;
    }
    return out;
}

QuotientBasis basis_from_kernel(unsigned k, const std::vector<std::size_t>& pivot_cols,
                                std::vector<std::vector<Rat>>&& kernel) {
    const auto& mons = monomials_of_degree(k);
    std::vector<bool> is_piv(mons.size(), false);
    for (auto c : pivot_cols) is_piv[c] = true;

    QuotientBasis qb;
    qb.degree = k;
    std::vector<Rat> flat;
    flat.reserve(kernel.size() * mons.size());
    for (std::size_t s = 0; s < mons.size(); ++s)
        if (!is_piv[s]) qb.standard_monomials.push_back(mons[s]);
    for (auto& v : kernel)
        for (auto& x : v) flat.push_back(std::move(x));

    std::vector<std::string> row_labels;
    row_labels.reserve(qb.standard_monomials.size());
    for (const auto& m : qb.standard_monomials) row_labels.push_back(monomial_name(m));
    qb.reduce = RatMatrix(std::move(row_labels), monomial_labels(k), std::move(flat));
    return qb;
}

} // namespace

std::vector<Rat> QuotientBasis::apply(const std::vector<Rat>& full_coeffs) const {
    return mat_vec(reduce, full_coeffs);
}

JacobianRing::JacobianRing(CubicForm f) : f_(std::move(f)) {}

const QuotientBasis& JacobianRing::basis(unsigned k) const {
    if (k > 6) throw Unsupported("graded pieces are only tracked up to degree 6");
    if (!cache_[k]) cache_[k] = (k == 6) ? socle_probe_basis() : compute_basis(k);
    return *cache_[k];
}

// Echelonize the degree-k slice of the Jacobian ideal, spanned by
// { m * dF/dx_i : deg m = k-2 }. The reduced kernel of that slice matrix is
// simultaneously the normal-form projection: row s is the functional that
// reads off the coefficient of the s-th standard monomial.
QuotientBasis JacobianRing::compute_basis(unsigned k) const {
    const auto& mons = monomials_of_degree(k);
    const std::size_t n = mons.size();

    std::vector<std::vector<Rat>> rows;
    if (k >= 2) {
        const auto gens = jacobian_generators(f_);
        const auto& shifts = monomials_of_degree(k - 2);
        rows.reserve(5 * shifts.size());
        for (const auto& gen : gens) {
            if (gen.empty()) continue;
            for (const auto& m : shifts) {
                std::vector<Rat> row(n, Rat(0));
                for (const auto& [ge, gc] : gen) row[monomial_index(mono_mul(m, ge))] += gc;
                rows.push_back(std::move(row));
            }
        }
    }

    auto ref = detail::bareiss_echelon(detail::integerize_rows(rows), n);
    return basis_from_kernel(k, ref.pivot_cols, detail::kernel_from_echelon(ref));
}

// Degree 6 never echelonizes the raw 350x210 slice. The ideal is generated
// in degree 2, so its degree-6 piece is spanned by x_t times the degree-5
// piece, and the degree-5 echelon rows can be reconstructed sparsely from
// the degree-5 normal form: for each pivot monomial p the row is
// p - sum_s reduce[s][p] * (s-th standard monomial), which has one entry per
// standard monomial plus one. For smooth forms that means two entries.
QuotientBasis JacobianRing::socle_probe_basis() const {
    const QuotientBasis& q5 = basis(5);
    const auto& mons5 = monomials_of_degree(5);
    const std::size_t n5 = mons5.size();
    const std::size_t n6 = monomials_of_degree(6).size();

    std::vector<bool> is_std(n5, false);
    std::vector<std::size_t> std_cols;
    for (const auto& m : q5.standard_monomials) {
        is_std[monomial_index(m)] = true;
        std_cols.push_back(monomial_index(m));
    }

    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
    rows.reserve(5 * (n5 - std_cols.size()));
    for (std::size_t p = 0; p < n5; ++p) {
        if (is_std[p]) continue;
        std::vector<std::pair<std::size_t, Rat>> row5;
        row5.emplace_back(p, Rat(1));
        for (std::size_t s = 0; s < std_cols.size(); ++s) {
            const Rat& c = q5.reduce.at(s, p);
            if (sgn(c) != 0) row5.emplace_back(std_cols[s], -c);
        }
        for (std::size_t t = 0; t < 5; ++t) {
            Exps xt{};
            xt[t] = 1;
            std::vector<std::pair<std::size_t, Rat>> shifted;
            shifted.reserve(row5.size());
            for (const auto& [c5, val] : row5)
                shifted.emplace_back(monomial_index(mono_mul(mons5[c5], xt)), val);
            rows.push_back(std::move(shifted));
        }
    }

    auto ref = detail::sparse_echelon(std::move(rows), n6);
    return basis_from_kernel(6, ref.pivot_cols, detail::kernel_from_sparse(ref));
}

std::array<std::size_t, 7> JacobianRing::hilbert() const {
    std::array<std::size_t, 7> out{};
    for (unsigned k = 0; k <= 6; ++k) out[k] = basis(k).standard_monomials.size();
    return out;
}

bool JacobianRing::smooth() const {
    return hilbert() == std::array<std::size_t, 7>{1, 5, 10, 10, 5, 1, 0};
}

RingElement JacobianRing::element_from_terms(const TermMap& terms, unsigned k) const {
    return RingElement{k, basis(k).apply(dense_from_terms(terms, k))};
}

RingElement JacobianRing::multiply(const RingElement& a, const RingElement& b) const {
    const unsigned d = a.degree + b.degree;
    if (d > 6) throw InvalidInput("ring product exceeds the tracked degrees");
    const auto& qa = basis(a.degree);
    const auto& qb = basis(b.degree);
    if (a.coords.size() != qa.standard_monomials.size() ||
        b.coords.size() != qb.standard_monomials.size())
        throw InvalidInput("ring element has the wrong coordinate length");

    std::vector<Rat> dense(monomials_of_degree(d).size(), Rat(0));
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (sgn(a.coords[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (sgn(b.coords[j]) == 0) continue;
            const auto e = mono_mul(qa.standard_monomials[i], qb.standard_monomials[j]);
            dense[monomial_index(e)] += a.coords[i] * b.coords[j];
        }
    }
    return RingElement{d, basis(d).apply(dense)};
}

RatMatrix JacobianRing::pairing_r1_r4() const {
    if (!smooth()) throw NotSmooth("pairing matrix needs a smooth form");
    const auto& b1 = basis(1);
    const auto& b4 = basis(4);

    std::vector<Rat> flat;
    flat.reserve(25);
    for (std::size_t i = 0; i < 5; ++i) {
        RingElement xi{1, std::vector<Rat>(5, Rat(0))};
        xi.coords[i] = 1;
        for (std::size_t j = 0; j < 5; ++j) {
            RingElement yj{4, std::vector<Rat>(5, Rat(0))};
            yj.coords[j] = 1;
            flat.push_back(multiply(xi, yj).coords[0]);
        }
    }

    std::vector<std::string> rl, cl;
    for (const auto& m : b1.standard_monomials) rl.push_back(monomial_name(m));
    for (const auto& m : b4.standard_monomials) cl.push_back(monomial_name(m));
    return RatMatrix(std::move(rl), std::move(cl), std::move(flat));
}

} // namespace cubicver
