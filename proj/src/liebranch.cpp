#include "cubicver/liebranch.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cubicver/sha256.hpp"

namespace cubicver {

namespace {

const std::vector<std::pair<std::string, SimpleType>>& supported_types() {
    static const std::vector<std::pair<std::string, SimpleType>> table = {
        {"A1", {Family::A, 1}}, {"A2", {Family::A, 2}}, {"A5", {Family::A, 5}},
        {"C4", {Family::C, 4}}, {"D5", {Family::D, 5}}, {"E6", {Family::E, 6}},
        {"F4", {Family::F, 4}}, {"G2", {Family::G, 2}},
    };
    return table;
}

std::vector<std::vector<int>> simply_laced_chain(unsigned r) {
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (unsigned i = 0; i < r; ++i) {
        a[i][i] = 2;
        if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

// cartan[i][j] = <alpha_i, alpha_j-check>; sym_diag[i] = half the squared
// length of alpha_i, short roots normalized to 1
void cartan_data(SimpleType t, std::vector<std::vector<int>>& a, std::vector<int>& d) {
    const unsigned r = t.rank;
    switch (t.family) {
    case Family::A:
        a = simply_laced_chain(r);
        d.assign(r, 1);
        return;
    case Family::C:
        // alpha_1..alpha_{r-1} short, alpha_r long
        a = simply_laced_chain(r);
        a[r - 2][r - 1] = -1;
        a[r - 1][r - 2] = -2;
        d.assign(r, 1);
        d[r - 1] = 2;
        return;
    case Family::D:
        a = simply_laced_chain(r);
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0;
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1; // fork at the antepenultimate node
        d.assign(r, 1);
        return;
    case Family::E:
        // chain 1-3-4-5-6 with node 2 attached to node 4 (zero-indexed below)
        a = std::vector<std::vector<int>>(r, std::vector<int>(r, 0));
        for (unsigned i = 0; i < r; ++i) a[i][i] = 2;
        for (auto [i, j] : {std::pair<int, int>{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}})
            a[i][j] = a[j][i] = -1;
        d.assign(r, 1);
        return;
    case Family::F:
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a = simply_laced_chain(r);
        a[1][2] = -2;
        a[2][1] = -1;
        d = {2, 2, 1, 1};
        return;
    case Family::G:
        // alpha_1 short, alpha_2 long
        a = {{2, -1}, {-3, 2}};
        d = {1, 3};
        return;
    }
    throw Unsupported("unknown family");
}

std::size_t expected_root_count(SimpleType t) {
    switch (t.family) {
    case Family::A: return std::size_t(t.rank) * (t.rank + 1) / 2;
    case Family::C: return std::size_t(t.rank) * t.rank;
    case Family::D: return std::size_t(t.rank) * (t.rank - 1);
    case Family::E: return 36; // rank 6 only
    case Family::F: return 24;
    case Family::G: return 6;
    }
    throw Unsupported("unknown family");
}

RootSystem build_root_system(SimpleType t) {
    RootSystem rs;
    rs.type = t;
    cartan_data(t, rs.cartan, rs.sym_diag);
    const unsigned r = t.rank;

    // the symmetrizer must make d[j]*a[i][j] symmetric, or the pairing below
    // is not an inner product
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j)
            if (rs.sym_diag[j] * rs.cartan[i][j] != rs.sym_diag[i] * rs.cartan[j][i])
                throw InconsistentMethods("asymmetric symmetrized Cartan matrix");

    // closure under root addition: beta + alpha_i is a root iff the downward
    // alpha_i-string length p satisfies p - <beta, alpha_i-check> > 0
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (unsigned i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (unsigned i = 0; i < r; ++i) {
                int p = 0;
                std::vector<int> lower = beta;
                while (true) {
                    lower[i] -= 1;
                    if (lower[i] < 0 || !seen.count(lower)) break;
                    ++p;
                }
                int pairing = 0;
                for (unsigned j = 0; j < r; ++j) pairing += beta[j] * rs.cartan[j][i];
                if (p - pairing > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(std::move(up));
                }
            }
        }
        frontier = std::move(next);
    }

    rs.positive.assign(seen.begin(), seen.end());
    std::sort(rs.positive.begin(), rs.positive.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  const int hx = std::accumulate(x.begin(), x.end(), 0);
                  const int hy = std::accumulate(y.begin(), y.end(), 0);
                  return hx != hy ? hx < hy : x < y;
              });
    if (rs.positive.size() != expected_root_count(t))
        throw InconsistentMethods("positive-root closure has the wrong cardinality for " +
                                  type_name(t));
    return rs;
}

void require_dominant(SimpleType t, const Weight& w) {
    if (w.size() != t.rank)
        throw InvalidWeight("weight has " + std::to_string(w.size()) + " coordinates, " +
                            type_name(t) + " needs " + std::to_string(t.rank));
    if (!is_dominant(w)) throw InvalidWeight("weight is not dominant");
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string dims_str(const std::vector<mpz_class>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += "+";
        s += dims[i].get_str();
    }
    return s;
}

} // namespace

SimpleType simple_type_of(const std::string& name) {
    for (const auto& [n, t] : supported_types())
        if (n == name) return t;
    throw Unsupported("unsupported simple type '" + name + "'");
}

std::string type_name(SimpleType t) {
    for (const auto& [n, u] : supported_types())
        if (u == t) return n;
    throw Unsupported("unsupported simple type");
}

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long long c) { return c >= 0; });
}

const RootSystem& positive_roots(SimpleType t) {
    type_name(t); // reject unsupported types before building anything
    static std::map<SimpleType, RootSystem> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
    return it->second;
}

mpz_class weyl_dim(SimpleType t, const Weight& lambda) {
    require_dominant(t, lambda);
    const RootSystem& rs = positive_roots(t);
    mpz_class num = 1, den = 1;
    for (const auto& root : rs.positive) {
        long shifted = 0, rho = 0;
        for (unsigned j = 0; j < t.rank; ++j) {
            const long cd = static_cast<long>(root[j]) * rs.sym_diag[j];
            shifted += cd * static_cast<long>(lambda[j] + 1);
            rho += cd;
        }
        num *= shifted;
        den *= rho;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InconsistentMethods("Weyl dimension product is not an integer");
    return num / den;
}

Weight dual_weight(SimpleType t, const Weight& lambda) {
    require_dominant(t, lambda);
    const RootSystem& rs = positive_roots(t);
    Weight nu(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) nu[i] = -lambda[i];

    // walk -lambda into the dominant chamber one simple reflection at a time
    for (std::size_t step = 0; step < 100000; ++step) {
        std::size_t i = 0;
        while (i < nu.size() && nu[i] >= 0) ++i;
        if (i == nu.size()) return nu;
        const long long v = nu[i];
        for (std::size_t j = 0; j < nu.size(); ++j)
            nu[j] -= v * rs.cartan[i][j];
    }
    throw InconsistentMethods("dominance walk failed to terminate");
}

std::string elimination_name(Elimination e) {
    switch (e) {
    case Elimination::SelfDual: return "SelfDual";
    case Elimination::NoBigSummand: return "NoBigSummand";
    case Elimination::AlmostFaithfulComplement: return "AlmostFaithfulComplement";
    case Elimination::G2Containment: return "G2Containment";
    }
    throw InvalidInput("unknown elimination tag");
}

Elimination elimination_of(const std::string& name) {
    for (Elimination e : {Elimination::SelfDual, Elimination::NoBigSummand,
                          Elimination::AlmostFaithfulComplement, Elimination::G2Containment})
        if (elimination_name(e) == name) return e;
    throw InvalidInput("unknown elimination tag '" + name + "'");
}

std::string row_name(const BranchRow& row) {
    std::string s;
    for (std::size_t i = 0; i < row.subgroup.size(); ++i) {
        if (i) s += "x";
        s += type_name(row.subgroup[i]);
    }
    return s;
}

mpz_class summand_dim(const BranchRow& row, std::size_t k) {
    if (k >= row.summands.size()) throw InvalidInput("summand index out of range");
    mpz_class prod = 1;
    for (std::size_t f = 0; f < row.subgroup.size(); ++f)
        prod *= weyl_dim(row.subgroup[f], row.summands[k][f]);
    return prod;
}

BranchTable parse_branching_table(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("branching table is not valid JSON: ") + e.what());
    }

    if (!doc.is_object()) throw InvalidInput("branching table root must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "version" && key != "comment" && key != "rows")
            throw InvalidInput("branching table has unknown key '" + key + "'");
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<long long>() != 1)
        throw InvalidInput("branching table version must be the integer 1");
    if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].empty())
        throw InvalidInput("branching table needs a nonempty 'rows' array");

    BranchTable table;
    for (const auto& jrow : doc["rows"]) {
        if (!jrow.is_object()) throw InvalidInput("branching table row must be an object");
        for (const auto& [key, value] : jrow.items()) {
            (void)value;
            if (key != "subgroup" && key != "summands" && key != "dims" &&
                key != "self_dual" && key != "elimination")
                throw InvalidInput("branching row has unknown key '" + key + "'");
        }
        for (const char* key : {"subgroup", "summands", "dims", "self_dual", "elimination"})
            if (!jrow.contains(key))
                throw InvalidInput(std::string("branching row misses key '") + key + "'");

        BranchRow row;
        if (!jrow["subgroup"].is_array() || jrow["subgroup"].empty())
            throw InvalidInput("row subgroup must be a nonempty array of type names");
        for (const auto& jt : jrow["subgroup"]) {
            if (!jt.is_string()) throw InvalidInput("subgroup entries must be strings");
            try {
                row.subgroup.push_back(simple_type_of(jt.get<std::string>()));
            } catch (const Unsupported& e) {
                throw InvalidInput(e.what());
            }
        }

        if (!jrow["summands"].is_array() || jrow["summands"].empty())
            throw InvalidInput("row summands must be a nonempty array");
        for (const auto& jsummand : jrow["summands"]) {
            if (!jsummand.is_array() || jsummand.size() != row.subgroup.size())
                throw InvalidInput("each summand needs one weight per subgroup factor");
            std::vector<Weight> ws;
            for (std::size_t f = 0; f < row.subgroup.size(); ++f) {
                const auto& jw = jsummand[f];
                if (!jw.is_array() || jw.size() != row.subgroup[f].rank)
                    throw InvalidInput("weight length must equal the factor rank");
                Weight w;
                for (const auto& jc : jw) {
                    if (!jc.is_number_integer() || jc.get<long long>() < 0)
                        throw InvalidInput("weight coordinates must be nonnegative integers");
                    w.push_back(jc.get<long long>());
                }
                ws.push_back(std::move(w));
            }
            row.summands.push_back(std::move(ws));
        }

        if (!jrow["dims"].is_array() || jrow["dims"].size() != row.summands.size())
            throw InvalidInput("row needs one expected dimension per summand");
        for (const auto& jd : jrow["dims"]) {
            if (!jd.is_number_integer() || jd.get<long long>() < 1)
                throw InvalidInput("expected dimensions must be positive integers");
            row.expected_dims.push_back(static_cast<unsigned>(jd.get<long long>()));
        }

        if (!jrow["self_dual"].is_boolean())
            throw InvalidInput("row self_dual must be a boolean");
        row.expected_self_dual = jrow["self_dual"].get<bool>();

        if (!jrow["elimination"].is_string())
            throw InvalidInput("row elimination must be a string");
        row.elimination = elimination_of(jrow["elimination"].get<std::string>());

        table.rows.push_back(std::move(row));
    }
    return table;
}

const char* const branching_table_sha256 =
    "ade864fd2707bab9e10e25b0a6317e7625c9e497d82becc36deb918e85391355";

BranchTable load_branching_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read branching table file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    const std::string digest = sha256_hex(bytes);
    if (digest != branching_table_sha256)
        throw InvalidInput("branching table checksum mismatch for '" + path + "': got " +
                           digest);
    BranchTable table = parse_branching_table(bytes);
    table.sha256_hex = digest;
    return table;
}

BranchTable load_default_branching_table() {
    const std::string local = "data/branching_table.json";
    if (std::ifstream probe(local, std::ios::binary); probe.good())
        return load_branching_table(local);
#ifdef CUBICVER_DATA_DIR
    return load_branching_table(std::string(CUBICVER_DATA_DIR) + "/branching_table.json");
#else
    throw InvalidInput("no branching table at '" + local + "' and no built-in path");
#endif
}

namespace {

// summand as a sortable value: the tuple of factor weights
using SummandKey = std::vector<Weight>;

bool computed_self_dual(const BranchRow& row) {
    std::vector<SummandKey> original = row.summands;
    std::vector<SummandKey> dualized;
    for (const auto& summand : row.summands) {
        SummandKey dual;
        for (std::size_t f = 0; f < row.subgroup.size(); ++f)
            dual.push_back(dual_weight(row.subgroup[f], summand[f]));
        dualized.push_back(std::move(dual));
    }
    std::sort(original.begin(), original.end());
    std::sort(dualized.begin(), dualized.end());
    return original == dualized;
}

std::vector<mpz_class> computed_dims(const BranchRow& row) {
    std::vector<mpz_class> dims;
    for (std::size_t k = 0; k < row.summands.size(); ++k) dims.push_back(summand_dim(row, k));
    return dims;
}

} // namespace

std::vector<TableCheck> verify_branching_table(const BranchTable& table) {
    std::vector<TableCheck> out;
    for (const BranchRow& row : table.rows) {
        const std::string name = row_name(row);
        const std::vector<mpz_class> dims = computed_dims(row);

        std::vector<mpz_class> expected;
        for (unsigned d : row.expected_dims) expected.emplace_back(d);
        out.push_back({name, "dims", dims == expected, dims_str(expected), dims_str(dims)});

        mpz_class sum = 0;
        for (const auto& d : dims) sum += d;
        out.push_back({name, "sum27", sum == 27, "27", sum.get_str()});

        const bool sd = computed_self_dual(row);
        out.push_back({name, "self_dual", sd == row.expected_self_dual,
                       row.expected_self_dual ? "true" : "false", sd ? "true" : "false"});
    }

    // the ambient group: both 27-dimensional fundamental representations
    // (either can be the one acting; the verdicts hold for both)
    const SimpleType e6 = simple_type_of("E6");
    const Weight w1 = {1, 0, 0, 0, 0, 0}, w6 = {0, 0, 0, 0, 0, 1};
    const mpz_class d1 = weyl_dim(e6, w1), d6 = weyl_dim(e6, w6);
    out.push_back({"E6", "dim_27_first", d1 == 27, "27", d1.get_str()});
    out.push_back({"E6", "dim_27_second", d6 == 27, "27", d6.get_str()});
    const Weight dual1 = dual_weight(e6, w1);
    const bool swapped = dual1 == w6 && dual_weight(e6, w6) == w1;
    out.push_back({"E6", "not_self_dual", swapped && dual1 != w1,
                   "duality exchanges the two 27-dimensional weights",
                   "dual" + weight_str(w1) + " = " + weight_str(dual1)});
    return out;
}

RankBound min_big_summand_rank() {
    // sections of the line bundle twisted by the canonical bundle, top
    // cohomology of the line bundle itself, and d-1 for a d-dimensional
    // fiber; the two cohomology counts are Serre-dual on the Fano surface
    return RankBound{6, 6, 2 - 1};
}

bool EliminationOutcome::all_passed() const {
    return big_summand_predicate.passed &&
           std::all_of(rows.begin(), rows.end(),
                       [](const EliminationCheck& c) { return c.passed; });
}

EliminationOutcome rule_out_subgroups(const BranchTable& table, unsigned threshold) {
    if (threshold == 0) throw InvalidInput("elimination threshold must be positive");
    EliminationOutcome outcome;
    std::size_t max_big = 0;
    std::string worst_row = "none";

    for (const BranchRow& row : table.rows) {
        const std::string name = row_name(row);
        const std::vector<mpz_class> dims = computed_dims(row);
        const bool sd = computed_self_dual(row);

        std::vector<std::size_t> big; // summands that could contain the big piece
        for (std::size_t k = 0; k < dims.size(); ++k)
            if (dims[k] >= threshold) big.push_back(k);

        EliminationCheck check{name, row.elimination, false, ""};
        switch (row.elimination) {
        case Elimination::SelfDual:
            check.passed = sd;
            check.detail = sd ? "restriction is self-dual; the verified local system is not"
                              : "declared SelfDual but duality moves the summand multiset";
            break;

        case Elimination::NoBigSummand:
            check.passed = big.empty();
            check.detail = check.passed
                               ? "all summand dimensions " + dims_str(dims) + " are below " +
                                     std::to_string(threshold)
                               : "declared NoBigSummand but a summand reaches the threshold";
            break;

        case Elimination::AlmostFaithfulComplement: {
            bool nontrivial_rest = false;
            for (std::size_t k = 0; k < dims.size(); ++k)
                if ((big.empty() || k != big[0]) && dims[k] > 1) nontrivial_rest = true;
            check.passed = !sd && big.size() == 1 && nontrivial_rest;
            if (check.passed)
                check.detail = "unique summand of dimension >= " + std::to_string(threshold) +
                               " (" + dims[big[0]].get_str() +
                               "); the complement holds a declared almost-faithful summand, so "
                               "trivial monodromy there is impossible";
            else
                check.detail = "AlmostFaithfulComplement needs a non-self-dual row with exactly "
                               "one big summand and a nontrivial complement";
            break;
        }

        case Elimination::G2Containment: {
            std::size_t g2_count = 0, g2_index = 0;
            for (std::size_t f = 0; f < row.subgroup.size(); ++f)
                if (row.subgroup[f] == SimpleType{Family::G, 2}) {
                    ++g2_count;
                    g2_index = f;
                }
            bool ok = !sd && g2_count == 1 && big.size() == 1;
            mpz_class piece = 0;
            if (ok) {
                // the big summand restricted to the G2 factor splits into
                // irreducible pieces of this dimension; each must be small
                piece = weyl_dim(row.subgroup[g2_index], row.summands[big[0]][g2_index]);
                ok = piece < threshold;
                for (std::size_t k = 0; ok && k < row.summands.size(); ++k) {
                    if (k == big[0]) continue;
                    const Weight& w = row.summands[k][g2_index];
                    // the complement must be G2-trivial so that trivial
                    // monodromy there forces the group into the G2 factor
                    ok = std::all_of(w.begin(), w.end(), [](long long c) { return c == 0; });
                }
            }
            check.passed = ok;
            check.detail =
                ok ? "big summand " + dims[big[0]].get_str() + " restricts to the G2 factor in "
                         "irreducible pieces of dimension " + piece.get_str() + " < " +
                         std::to_string(threshold) + "; the complement is G2-trivial"
                   : "G2Containment needs one G2 factor, one big summand with small "
                     "G2-restriction, and a G2-trivial complement";
            break;
        }
        }
        outcome.rows.push_back(std::move(check));

        if (!sd) {
            std::size_t count = 0;
            for (const auto& d : dims)
                if (d > threshold - 1) ++count;
            if (count > max_big) {
                max_big = count;
                worst_row = name;
            }
        }
    }

    outcome.big_summand_predicate = {
        "table", "at_most_one_big_summand", max_big <= 1,
        "every non-self-dual row has <= 1 summand of dimension > " +
            std::to_string(threshold - 1),
        "max " + std::to_string(max_big) + " (row " + worst_row + ")"};
    return outcome;
}

} // namespace cubicver
