#include "cubicver/polyring.hpp"
#include "cubicver/random.hpp"

namespace cubicver {

CubicForm CubicForm::from_terms(TermMap t) {
    for (const auto& [e, c] : t) {
        if (degree_of(e) != 3) throw InvalidInput("cubic form term of degree != 3");
        if (sgn(c) == 0) throw InvalidInput("cubic form stores a zero coefficient");
    }
    return CubicForm{std::move(t)};
}

CubicForm fermat_cubic() {
    TermMap t;
    for (std::size_t i = 0; i < 5; ++i) {
        Exps e{};
        e[i] = 3;
        t.emplace(e, Rat(1));
    }
    return CubicForm{std::move(t)};
}

CubicForm random_cubic(SplitMix64& rng, long long coeff_bound) {
    if (coeff_bound < 1) throw InvalidInput("coefficient bound must be at least 1");
    TermMap t;
    for (const auto& e : monomials_of_degree(3)) {
        const long long c = rng.symmetric(coeff_bound);
        if (c != 0) t.emplace(e, rat_of(c));
    }
    return CubicForm{std::move(t)};
}

CubicForm random_cubic(std::uint64_t seed, long long coeff_bound) {
    SplitMix64 rng(seed);
    return random_cubic(rng, coeff_bound);
}

std::array<TermMap, 5> jacobian_generators(const CubicForm& f) {
    if (f.terms.empty()) throw InvalidInput("zero form has no Jacobian ideal");
    std::array<TermMap, 5> out;
    for (const auto& [e, c] : f.terms) {
        for (std::size_t i = 0; i < 5; ++i) {
            if (e[i] == 0) continue;
            Exps d = e;
            --d[i];
            Rat coeff = c * rat_of(static_cast<long long>(e[i]));
            auto [it, fresh] = out[i].emplace(d, coeff);
            if (!fresh) {
                it->second += coeff;
                if (sgn(it->second) == 0) out[i].erase(it);
            }
        }
    }
    return out;
}

CubicForm cubic_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("cubic file: expected a JSON object");
    if (!j.contains("vars") || !j["vars"].is_number_integer() || j["vars"].get<int>() != 5)
        throw InvalidInput("cubic file: vars must be 5");
    if (!j.contains("degree") || !j["degree"].is_number_integer() || j["degree"].get<int>() != 3)
        throw InvalidInput("cubic file: degree must be 3");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw InvalidInput("cubic file: terms must be an array");

    TermMap t;
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("exps") || !term.contains("coeff"))
            throw InvalidInput("cubic file: each term needs exps and coeff");
        const auto& ex = term["exps"];
        if (!ex.is_array() || ex.size() != 5)
            throw InvalidInput("cubic file: exps must be 5 integers");
        Exps e{};
        unsigned deg = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            if (!ex[i].is_number_integer() || ex[i].get<long long>() < 0)
                throw InvalidInput("cubic file: exponents must be nonnegative integers");
            const long long v = ex[i].get<long long>();
            if (v > 3) throw InvalidInput("cubic file: exponent exceeds the degree");
            e[i] = static_cast<std::uint8_t>(v);
            deg += static_cast<unsigned>(v);
        }
        if (deg != 3) throw InvalidInput("cubic file: term exponents must sum to 3");
        if (!term["coeff"].is_string())
            throw InvalidInput("cubic file: coeff must be a string like \"7\" or \"-2/3\"");
        Rat c = rat_from_string(term["coeff"].get<std::string>());
        if (t.count(e)) throw InvalidInput("cubic file: duplicate exps key");
        if (sgn(c) != 0) t.emplace(e, std::move(c));
    }
    return CubicForm{std::move(t)};
}

nlohmann::json cubic_to_json(const CubicForm& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms) { // map order = canonical listing order
        nlohmann::json term;
        term["exps"] = {e[0], e[1], e[2], e[3], e[4]};
        term["coeff"] = rat_to_string(c);
        terms.push_back(std::move(term));
    }
    nlohmann::json out;
    out["vars"] = 5;
    out["degree"] = 3;
    out["terms"] = std::move(terms);
    return out;
}

} // namespace cubicver
