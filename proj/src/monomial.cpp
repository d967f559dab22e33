#include "cubicver/polyring.hpp"

namespace cubicver {

unsigned degree_of(const Exps& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

Exps mono_mul(const Exps& a, const Exps& b) {
    Exps out{};
    for (std::size_t i = 0; i < 5; ++i) out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return out;
}

std::string monomial_name(const Exps& e) {
    std::string out;
    for (std::size_t i = 0; i < 5; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (e[i] > 1) {
            out += '^';
            out += std::to_string(e[i]);
        }
    }
    return out.empty() ? "1" : out;
}

bool MonoBefore::operator()(const Exps& a, const Exps& b) const {
    const unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return a > b; // lex with x0 dominant: higher exponent tuple lists first
}

namespace {

constexpr unsigned kMaxDegree = 6;

std::vector<std::vector<Exps>> build_tables() {
    std::vector<std::vector<Exps>> tables(kMaxDegree + 1);
    for (unsigned d = 0; d <= kMaxDegree; ++d) {
        auto& list = tables[d];
        for (int e0 = static_cast<int>(d); e0 >= 0; --e0)
            for (int e1 = static_cast<int>(d) - e0; e1 >= 0; --e1)
                for (int e2 = static_cast<int>(d) - e0 - e1; e2 >= 0; --e2)
                    for (int e3 = static_cast<int>(d) - e0 - e1 - e2; e3 >= 0; --e3) {
                        const int e4 = static_cast<int>(d) - e0 - e1 - e2 - e3;
                        list.push_back(Exps{static_cast<std::uint8_t>(e0),
                                            static_cast<std::uint8_t>(e1),
                                            static_cast<std::uint8_t>(e2),
                                            static_cast<std::uint8_t>(e3),
                                            static_cast<std::uint8_t>(e4)});
                    }
    }
    return tables;
}

std::vector<std::map<Exps, std::size_t, MonoBefore>> build_indexes(
    const std::vector<std::vector<Exps>>& tables) {
    std::vector<std::map<Exps, std::size_t, MonoBefore>> idx(tables.size());
    for (std::size_t d = 0; d < tables.size(); ++d)
        for (std::size_t i = 0; i < tables[d].size(); ++i) idx[d].emplace(tables[d][i], i);
    return idx;
}

const std::vector<std::vector<Exps>>& tables() {
    static const std::vector<std::vector<Exps>> t = build_tables();
    return t;
}

const std::vector<std::map<Exps, std::size_t, MonoBefore>>& indexes() {
    static const std::vector<std::map<Exps, std::size_t, MonoBefore>> ix = build_indexes(tables());
    return ix;
}

} // namespace

const std::vector<Exps>& monomials_of_degree(unsigned d) {
    if (d > kMaxDegree) throw Unsupported("monomial degree above 6");
    return tables()[d];
}

std::size_t monomial_index(const Exps& e) {
    const unsigned d = degree_of(e);
    if (d > kMaxDegree) throw Unsupported("monomial degree above 6");
    return indexes()[d].at(e);
}

} // namespace cubicver
