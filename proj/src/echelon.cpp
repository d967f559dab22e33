#include "cubicver/echelon.hpp"

#include <map>

namespace cubicver {

std::vector<std::string> numeric_labels(char prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, prefix) + std::to_string(i));
    return out;
}

RatMatrix rat_matrix_from_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    std::vector<Rat> flat;
    flat.reserve(nr * nc);
    for (const auto& r : rows) {
        if (r.size() != nc) throw InvalidInput("ragged rows");
        for (const auto& x : r) flat.push_back(x);
    }
    return RatMatrix(numeric_labels('r', nr), numeric_labels('c', nc), std::move(flat));
}

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
    if (v.size() != m.cols()) throw InvalidInput("mat_vec dimension mismatch");
    std::vector<Rat> out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m.at(i, j)) != 0 && sgn(v[j]) != 0) acc += m.at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("mat_mul inner dimension mismatch");
    std::vector<Rat> flat(a.rows() * b.cols(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (sgn(bkj) != 0) flat[i * b.cols() + j] += aik * bkj;
            }
        }
    return RatMatrix(a.row_labels, b.col_labels, std::move(flat));
}

RatMatrix zero_matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
    const std::size_t n = row_labels.size() * col_labels.size();
    return RatMatrix(std::move(row_labels), std::move(col_labels), std::vector<Rat>(n, Rat(0)));
}

namespace detail {

IntEchelon bareiss_echelon(std::vector<std::vector<Int>>&& m, std::size_t ncols) {
    IntEchelon out;
    out.ncols = ncols;
    const std::size_t nr = m.size();
    std::size_t r = 0;
    Int prev(1);
    for (std::size_t c = 0; c < ncols && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (sgn(m[i][c]) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == nr) continue; // column already clear below the current row
        if (sel != r) m[r].swap(m[sel]);
        const Int piv = m[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            Int& lead = m[i][c];
            if (sgn(lead) == 0) {
                // Bareiss still rescales rows with a zero leading entry:
                // entries must remain minors for the exact divisions to hold.
                for (std::size_t j = c + 1; j < ncols; ++j) {
                    Int& x = m[i][j];
                    if (sgn(x) == 0) continue;
                    x *= piv;
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
                }
            } else {
                for (std::size_t j = c + 1; j < ncols; ++j) {
                    Int& x = m[i][j];
                    x *= piv;
                    mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), m[r][j].get_mpz_t());
                    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
                }
                lead = 0;
            }
        }
        out.pivot_cols.push_back(c);
        prev = piv;
        ++r;
    }
    // Rows past the last pivot are exactly zero (each column was either
    // pivoted, which clears it, or skipped because it was already clear).
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::size_t bareiss_rank(std::vector<std::vector<Int>>&& rows, std::size_t ncols) {
    return bareiss_echelon(std::move(rows), ncols).pivot_cols.size();
}

std::vector<std::vector<Rat>> kernel_from_echelon(const IntEchelon& ref) {
    const std::size_t n = ref.ncols;
    const std::size_t rk = ref.pivot_cols.size();
    std::vector<bool> is_piv(n, false);
    for (auto c : ref.pivot_cols) is_piv[c] = true;

    std::vector<std::vector<Rat>> out;
    out.reserve(n - rk);
    for (std::size_t s = 0; s < n; ++s) {
        if (is_piv[s]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[s] = 1;
        // Pivot rows whose pivot sits right of s can only produce zeros, so
        // back-substitute over the rows with pivot column < s.
        std::size_t hi = 0;
        while (hi < rk && ref.pivot_cols[hi] < s) ++hi;
        for (std::size_t ri = hi; ri-- > 0;) {
            const std::size_t c = ref.pivot_cols[ri];
            const auto& row = ref.rows[ri];
            Rat acc(row[s]); // coefficient of the free variable itself
            for (std::size_t rj = ri + 1; rj < hi; ++rj) {
                const std::size_t pj = ref.pivot_cols[rj];
                if (sgn(row[pj]) != 0 && sgn(v[pj]) != 0) acc += Rat(row[pj]) * v[pj];
            }
            if (sgn(acc) != 0) v[c] = -acc / Rat(row[c]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Int>> integerize_rows(const std::vector<std::vector<Rat>>& rows) {
    std::vector<std::vector<Int>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        Int l(1);
        for (const auto& q : r)
            if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> row;
        row.reserve(r.size());
        for (const auto& q : r) {
            Int x = q.get_num();
            if (q.get_den() != 1) {
                Int f;
                mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
                x *= f;
            } else if (l != 1) {
                x *= l;
            }
            row.push_back(std::move(x));
        }
        out.push_back(std::move(row));
    }
    return out;
}

SparseEchelon sparse_echelon(std::vector<std::vector<std::pair<std::size_t, Rat>>>&& rows,
                             std::size_t ncols) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, Rat>>> pivots;
    for (auto& raw : rows) {
        std::map<std::size_t, Rat> work;
        for (auto& [c, val] : raw)
            if (sgn(val) != 0) {
                auto [it, fresh] = work.emplace(c, val);
                if (!fresh) {
                    it->second += val;
                    if (sgn(it->second) == 0) work.erase(it);
                }
            }
        while (!work.empty()) {
            const std::size_t lead = work.begin()->first;
            auto pit = pivots.find(lead);
            if (pit == pivots.end()) {
                const Rat lv = work.begin()->second;
                std::vector<std::pair<std::size_t, Rat>> stored;
                stored.reserve(work.size());
                for (auto& [c, val] : work) stored.emplace_back(c, val / lv);
                pivots.emplace(lead, std::move(stored));
                break;
            }
            const Rat f = work.begin()->second;
            for (const auto& [c, val] : pit->second) {
                auto w = work.find(c);
                if (w == work.end()) {
                    Rat nv = -f * val;
                    if (sgn(nv) != 0) work.emplace(c, std::move(nv));
                } else {
                    w->second -= f * val;
                    if (sgn(w->second) == 0) work.erase(w);
                }
            }
        }
    }
    SparseEchelon out;
    out.ncols = ncols;
    for (auto& [c, row] : pivots) {
        out.pivot_cols.push_back(c);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<Rat>> kernel_from_sparse(const SparseEchelon& ref) {
    const std::size_t n = ref.ncols;
    const std::size_t rk = ref.pivot_cols.size();
    std::vector<bool> is_piv(n, false);
    for (auto c : ref.pivot_cols) is_piv[c] = true;

    std::vector<std::vector<Rat>> out;
    out.reserve(n - rk);
    for (std::size_t s = 0; s < n; ++s) {
        if (is_piv[s]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[s] = 1;
        std::size_t hi = 0;
        while (hi < rk && ref.pivot_cols[hi] < s) ++hi;
        for (std::size_t ri = hi; ri-- > 0;) {
            const auto& row = ref.rows[ri];
            Rat acc(0);
            for (const auto& [j, val] : row) {
                if (j <= ref.pivot_cols[ri]) continue;
                if (j > s) break; // entries right of s multiply zeros
                if (sgn(v[j]) != 0) acc += val * v[j];
            }
            if (sgn(acc) != 0) v[ref.pivot_cols[ri]] = -acc; // leading coeff is 1
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

namespace {

std::vector<std::vector<Int>> rows_of(const RatMatrix& m) {
    std::vector<std::vector<Rat>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
    }
    return detail::integerize_rows(rows);
}

// Plain Gauss-Jordan over F_p on raw residues; returns rank, pivot columns,
// and the reduced rows (only when keep_rref is set).
struct FpRref {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<std::uint64_t>> rows;
};

FpRref fp_gauss(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p, bool keep_rref) {
    FpRref out;
    const std::size_t nr = m.size();
    const std::size_t nc = nr == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == nr) continue;
        if (sel != r) m[r].swap(m[sel]);
        const std::uint64_t inv = invmod(m[r][c], p);
        for (std::size_t j = c; j < nc; ++j) m[r][j] = mulmod(m[r][j], inv, p);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = c; j < nc; ++j) {
                const std::uint64_t sub = mulmod(f, m[r][j], p);
                m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + p - sub;
            }
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    if (keep_rref) {
        m.resize(r);
        out.rows = std::move(m);
    }
    return out;
}

} // namespace

EchelonResult<Rat> echelonize(const RatMatrix& m) {
    auto ref = detail::bareiss_echelon(rows_of(m), m.cols());
    EchelonResult<Rat> out;
    out.rank = ref.pivot_cols.size();
    out.pivot_cols = ref.pivot_cols;
    out.kernel_basis = detail::kernel_from_echelon(ref);
    return out;
}

EchelonResult<Fp> echelonize(const FpMatrix& m) {
    if (m.entries.empty()) throw InvalidInput("empty prime-field matrix: modulus unknown");
    const std::uint64_t p = m.entries[0].p;
    for (const auto& e : m.entries)
        if (e.p != p) throw InvalidInput("mixed prime-field moduli in one matrix");
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw InvalidInput("modulus is not an odd prime");

    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).v;
    auto rref = fp_gauss(std::move(rows), p, true);

    EchelonResult<Fp> out;
    out.rank = rref.rank;
    out.pivot_cols = rref.pivot_cols;
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : rref.pivot_cols) is_piv[c] = true;
    for (std::size_t s = 0; s < m.cols(); ++s) {
        if (is_piv[s]) continue;
        std::vector<Fp> v(m.cols(), Fp{0, p});
        v[s] = Fp{1, p};
        for (std::size_t r = 0; r < rref.rank; ++r) {
            const std::uint64_t x = rref.rows[r][s];
            v[rref.pivot_cols[r]] = Fp{x == 0 ? 0 : p - x, p};
        }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_mod_p(const RatMatrix& m, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw InvalidInput("p must be an odd prime");
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
    Int tmp;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            mpz_mod_ui(tmp.get_mpz_t(), q.get_den().get_mpz_t(), p);
            const std::uint64_t den = tmp.get_ui();
            if (den == 0) throw BadPrime("p divides a denominator");
            mpz_mod_ui(tmp.get_mpz_t(), q.get_num().get_mpz_t(), p);
            rows[i][j] = mulmod(tmp.get_ui(), invmod(den, p), p);
        }
    }
    return fp_gauss(std::move(rows), p, false).rank;
}

bool is_nondegenerate(const RatMatrix& m, bool require_square) {
    if (require_square && m.rows() != m.cols())
        throw InvalidInput("is_nondegenerate expects a square matrix");
    return echelonize(m).rank == std::min(m.rows(), m.cols());
}

} // namespace cubicver
