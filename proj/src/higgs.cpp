#include "cubicver/higgs.hpp"

#include <algorithm>

#include "cubicver/echelon.hpp"

namespace cubicver {

void InfGradedHiggs::validate() const {
    if (theta.size() != t_dim) throw InvalidInput("theta must have one block family per tangent direction");
    for (const auto& [p, dim] : grades)
        if (dim == 0) throw InvalidInput("zero-dimensional grades must be omitted");
    for (const auto& family : theta) {
        for (const auto& [p, m] : family) {
            const auto dst = grades.find(p - 1);
            const auto src = grades.find(p);
            if (src == grades.end() || dst == grades.end())
                throw InvalidInput("theta block connects a missing grade");
            if (m.rows() != dst->second || m.cols() != src->second)
                throw InvalidInput("theta block has the wrong shape");
        }
    }
}

const RatMatrix* InfGradedHiggs::block(std::size_t delta, int p) const {
    const auto& family = theta.at(delta);
    const auto it = family.find(p);
    return it == family.end() ? nullptr : &it->second;
}

std::size_t InfGradedHiggs::grade_dim(int p) const {
    const auto it = grades.find(p);
    return it == grades.end() ? 0 : it->second;
}

namespace {

// theta_i restricted to grade p as a concrete matrix, materializing zeros.
RatMatrix block_or_zero(const InfGradedHiggs& h, std::size_t delta, int p) {
    if (const RatMatrix* b = h.block(delta, p)) return *b;
    return zero_matrix(numeric_labels('r', h.grade_dim(p - 1)), numeric_labels('c', h.grade_dim(p)));
}

} // namespace

bool check_commuting(const InfGradedHiggs& h) {
    h.validate();
    for (std::size_t i = 0; i < h.t_dim; ++i) {
        for (std::size_t j = i + 1; j < h.t_dim; ++j) {
            for (const auto& [p, dim] : h.grades) {
                if (h.grade_dim(p - 1) == 0 || h.grade_dim(p - 2) == 0) continue;
                const auto lhs = mat_mul(block_or_zero(h, i, p - 1), block_or_zero(h, j, p));
                const auto rhs = mat_mul(block_or_zero(h, j, p - 1), block_or_zero(h, i, p));
                if (lhs.entries != rhs.entries) return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> multisets(std::size_t n_vars, unsigned n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    // lex-ascending multisets via depth-first growth with a floor index
    auto rec = [&](auto&& self, std::size_t floor, unsigned left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = floor; i < n_vars; ++i) {
            cur.push_back(i);
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

std::string multiset_label(const std::vector<std::size_t>& m,
                           const std::vector<std::string>& names) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += '*';
        out += names.at(m[i]);
    }
    return out;
}

namespace {

std::vector<std::string> tangent_names(std::size_t t_dim) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t_dim; ++i) out.push_back("d" + std::to_string(i));
    return out;
}

// grades p, ascending, for which both H^p and H^{p-n} are nonzero
std::vector<int> surviving_grades(const InfGradedHiggs& h, unsigned n) {
    std::vector<int> out;
    for (const auto& [p, dim] : h.grades)
        if (h.grade_dim(p - static_cast<int>(n)) != 0) out.push_back(p);
    return out;
}

} // namespace

RatMatrix iterate_theta(const InfGradedHiggs& h, unsigned n) {
    if (!check_commuting(h))
        throw NotAHiggsField("the fields do not commute, so their symmetric iterate is undefined");

    const auto cols = multisets(h.t_dim, n);
    const auto names = tangent_names(h.t_dim);
    std::vector<std::string> col_labels;
    col_labels.reserve(cols.size());
    for (const auto& m : cols) col_labels.push_back(multiset_label(m, names));

    const auto grades = surviving_grades(h, n);
    std::vector<std::string> row_labels;
    std::size_t nrows = 0;
    for (int p : grades) {
        const std::size_t r = h.grade_dim(p - static_cast<int>(n));
        const std::size_t c = h.grade_dim(p);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                row_labels.push_back("H" + std::to_string(p) + "->H" +
                                     std::to_string(p - static_cast<int>(n)) + "[" +
                                     std::to_string(i) + "," + std::to_string(j) + "]");
        nrows += r * c;
    }

    std::vector<Rat> entries(nrows * cols.size(), Rat(0));
    for (std::size_t mc = 0; mc < cols.size(); ++mc) {
        std::size_t row_off = 0;
        for (int p : grades) {
            const std::size_t r = h.grade_dim(p - static_cast<int>(n));
            const std::size_t c = h.grade_dim(p);
            // compose right-to-left: the last factor consumes grade p
            RatMatrix acc = zero_matrix(numeric_labels('r', c), numeric_labels('c', c));
            for (std::size_t i = 0; i < c; ++i) acc.at(i, i) = 1;
            int level = p;
            for (std::size_t k = cols[mc].size(); k-- > 0;) {
                acc = mat_mul(block_or_zero(h, cols[mc][k], level), acc);
                --level;
            }
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    entries[(row_off + i * c + j) * cols.size() + mc] = acc.at(i, j);
            row_off += r * c;
        }
    }
    return RatMatrix(std::move(row_labels), std::move(col_labels), std::move(entries));
}

InfGradedHiggs dual_higgs(const InfGradedHiggs& h, int d) {
    h.validate();
    InfGradedHiggs out;
    out.t_dim = h.t_dim;
    for (const auto& [p, dim] : h.grades) out.grades.emplace(d - p, dim);
    out.theta.resize(h.t_dim);
    for (std::size_t i = 0; i < h.t_dim; ++i) {
        for (const auto& [p, m] : h.theta[i]) {
            // the block H^p -> H^{p-1} transposes to a map out of
            // (H^{p-1})^dual, which sits at dual grade d-p+1
            out.theta[i].emplace(d - p + 1, m.transpose());
        }
    }
    out.validate();
    return out;
}

InfGradedHiggs direct_sum(const InfGradedHiggs& a, const InfGradedHiggs& b) {
    a.validate();
    b.validate();
    if (a.t_dim != b.t_dim) throw InvalidInput("direct sum needs a shared tangent space");

    InfGradedHiggs out;
    out.t_dim = a.t_dim;
    for (const auto& [p, dim] : a.grades) out.grades[p] += dim;
    for (const auto& [p, dim] : b.grades) out.grades[p] += dim;

    out.theta.resize(out.t_dim);
    for (std::size_t i = 0; i < out.t_dim; ++i) {
        for (const auto& [p, dim] : out.grades) {
            if (out.grade_dim(p - 1) == 0) continue;
            const std::size_t rows = out.grade_dim(p - 1);
            const std::size_t cols = out.grade_dim(p);
            const std::size_t ra = a.grade_dim(p - 1), ca = a.grade_dim(p);
            auto blk = zero_matrix(numeric_labels('r', rows), numeric_labels('c', cols));
            bool nonzero = false;
            if (const RatMatrix* ma = a.block(i, p)) {
                for (std::size_t r = 0; r < ma->rows(); ++r)
                    for (std::size_t c = 0; c < ma->cols(); ++c) blk.at(r, c) = ma->at(r, c);
                nonzero = true;
            }
            if (const RatMatrix* mb = b.block(i, p)) {
                for (std::size_t r = 0; r < mb->rows(); ++r)
                    for (std::size_t c = 0; c < mb->cols(); ++c)
                        blk.at(ra + r, ca + c) = mb->at(r, c);
                nonzero = true;
            }
            if (nonzero) out.theta[i].emplace(p, std::move(blk));
        }
    }
    out.validate();
    return out;
}

RatMatrix sym_power_map(const RatMatrix& m, unsigned d) {
    const auto src = multisets(m.cols(), d);
    const auto dst = multisets(m.rows(), d);
    std::map<std::vector<std::size_t>, std::size_t> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);

    std::vector<Rat> entries(dst.size() * src.size(), Rat(0));
    for (std::size_t col = 0; col < src.size(); ++col) {
        // expand the product of the images of the factors
        std::map<std::vector<std::size_t>, Rat> poly;
        poly.emplace(std::vector<std::size_t>{}, Rat(1));
        for (std::size_t factor : src[col]) {
            std::map<std::vector<std::size_t>, Rat> next;
            for (const auto& [mono, coeff] : poly) {
                for (std::size_t j = 0; j < m.rows(); ++j) {
                    const Rat& mj = m.at(j, factor);
                    if (sgn(mj) == 0) continue;
                    auto key = mono;
                    key.insert(std::upper_bound(key.begin(), key.end(), j), j);
                    auto [it, fresh] = next.emplace(std::move(key), coeff * mj);
                    if (!fresh) it->second += coeff * mj;
                }
            }
            poly = std::move(next);
        }
        for (const auto& [mono, coeff] : poly)
            entries[dst_index.at(mono) * src.size() + col] = coeff;
    }

    std::vector<std::string> row_labels, col_labels;
    for (const auto& ms : dst) row_labels.push_back(multiset_label(ms, m.row_labels));
    for (const auto& ms : src) col_labels.push_back(multiset_label(ms, m.col_labels));
    return RatMatrix(std::move(row_labels), std::move(col_labels), std::move(entries));
}

namespace {

RatMatrix mu_sym_kappa(const InfGradedHiggs& h, const CompatibilityContext& ctx) {
    if (ctx.d < 1) throw InvalidInput("ambient relative dimension must be at least 1");
    if (ctx.kappa.cols() != h.t_dim)
        throw InvalidInput("kappa must be defined on the tangent space of the Higgs bundle");
    const std::size_t symk = multisets(ctx.kappa.rows(), ctx.d).size();
    if (ctx.mu.cols() != symk)
        throw InvalidInput("mu must be defined on the d-th symmetric power of the target of kappa");
    return mat_mul(ctx.mu, sym_power_map(ctx.kappa, ctx.d));
}

} // namespace

bool is_compatible(const InfGradedHiggs& h, const CompatibilityContext& ctx) {
    const auto base = mu_sym_kappa(h, ctx);
    const auto theta_d = iterate_theta(h, ctx.d); // also enforces commuting
    for (const auto& v : echelonize(base).kernel_basis) {
        for (const auto& c : mat_vec(theta_d, v))
            if (sgn(c) != 0) return false;
    }
    return true;
}

std::vector<Rat> InducedC::apply(const std::vector<Rat>& x) const {
    if (x.size() != image_basis.rows()) throw InvalidInput("vector is not in the ambient space");
    // coordinates of x in the image basis: the unique kernel direction of
    // the basis matrix augmented with x
    std::vector<std::vector<Rat>> cols(image_basis.cols() + 1, std::vector<Rat>(x.size()));
    for (std::size_t j = 0; j < image_basis.cols(); ++j)
        for (std::size_t i = 0; i < x.size(); ++i) cols[j][i] = image_basis.at(i, j);
    cols.back() = x;

    auto aug = rat_matrix_from_rows(cols); // columns as rows: same rank facts
    auto r = echelonize(aug.transpose());
    if (r.rank != image_basis.cols())
        throw InvalidInput("vector lies outside the image of mu");
    if (r.kernel_basis.size() != 1) throw InvalidInput("image basis is degenerate");
    const auto& k = r.kernel_basis[0];
    std::vector<Rat> coords(image_basis.cols());
    for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = -k[j];
    return mat_vec(map, coords);
}

InducedC induced_c(const InfGradedHiggs& h, const CompatibilityContext& ctx) {
    if (echelonize(ctx.kappa).rank != ctx.kappa.rows())
        throw NotVersal("kappa is not surjective, so the induced map is not unique");
    if (!is_compatible(h, ctx))
        throw InvalidInput("the Higgs field is not compatible with the context");

    const auto base = mu_sym_kappa(h, ctx);     // C_dim x Sym^d T
    const auto theta_d = iterate_theta(h, ctx.d);
    const auto piv = echelonize(base).pivot_cols;

    InducedC out;
    out.basis_cols = piv;
    std::vector<Rat> basis_flat(base.rows() * piv.size());
    std::vector<Rat> map_flat(theta_d.rows() * piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k) {
        for (std::size_t i = 0; i < base.rows(); ++i)
            basis_flat[i * piv.size() + k] = base.at(i, piv[k]);
        for (std::size_t i = 0; i < theta_d.rows(); ++i)
            map_flat[i * piv.size() + k] = theta_d.at(i, piv[k]);
    }
    std::vector<std::string> basis_labels;
    for (std::size_t k = 0; k < piv.size(); ++k) basis_labels.push_back("imu" + std::to_string(k));
    out.image_basis = RatMatrix(base.row_labels, basis_labels, std::move(basis_flat));
    out.map = RatMatrix(theta_d.row_labels, std::move(basis_labels), std::move(map_flat));
    return out;
}

InfGradedHiggs random_scaled_chain(SplitMix64& rng, std::size_t t_dim,
                                   const std::vector<std::size_t>& dims,
                                   std::vector<long long>* scales_out) {
    if (t_dim == 0 || dims.empty()) throw InvalidInput("fixture needs a tangent space and grades");
    InfGradedHiggs h;
    h.t_dim = t_dim;
    const int top = static_cast<int>(dims.size()) - 1;
    for (int p = top; p >= 0; --p) h.grades.emplace(p, dims[static_cast<std::size_t>(top - p)]);

    // one shared block family, scaled per tangent direction
    std::map<int, RatMatrix> shared;
    for (int p = top; p >= 1; --p) {
        const std::size_t rows = h.grades.at(p - 1), cols = h.grades.at(p);
        auto m = zero_matrix(numeric_labels('r', rows), numeric_labels('c', cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_of(rng.symmetric(4));
        shared.emplace(p, std::move(m));
    }
    h.theta.resize(t_dim);
    if (scales_out) scales_out->clear();
    for (std::size_t i = 0; i < t_dim; ++i) {
        const long long scale = rng.symmetric(4);
        if (scales_out) scales_out->push_back(scale);
        if (scale == 0) continue; // a zero field is a legitimate direction
        for (const auto& [p, m] : shared) {
            auto scaled = m;
            for (auto& x : scaled.entries) x *= rat_of(scale);
            h.theta[i].emplace(p, std::move(scaled));
        }
    }
    h.validate();
    return h;
}

InfGradedHiggs random_two_grade(SplitMix64& rng, std::size_t t_dim, std::size_t dim1,
                                std::size_t dim0) {
    if (t_dim == 0 || dim1 == 0 || dim0 == 0) throw InvalidInput("fixture needs nonzero dimensions");
    InfGradedHiggs h;
    h.t_dim = t_dim;
    h.grades.emplace(1, dim1);
    h.grades.emplace(0, dim0);
    h.theta.resize(t_dim);
    for (std::size_t i = 0; i < t_dim; ++i) {
        auto m = zero_matrix(numeric_labels('r', dim0), numeric_labels('c', dim1));
        for (auto& x : m.entries) x = rat_of(rng.symmetric(4));
        h.theta[i].emplace(1, std::move(m));
    }
    h.validate();
    return h;
}

} // namespace cubicver
