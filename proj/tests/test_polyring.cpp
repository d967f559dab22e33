#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubicver/echelon.hpp"
#include "cubicver/polyring.hpp"
#include "cubicver/random.hpp"

using namespace cubicver;

namespace {

Exps mono(std::initializer_list<int> l) {
    Exps e{};
    std::size_t i = 0;
    for (int v : l) e[i++] = static_cast<std::uint8_t>(v);
    return e;
}

// x_I for a subset I of {0..4}: the square-free monomial with those indices.
Exps subset_mono(std::initializer_list<int> idx) {
    Exps e{};
    for (int i : idx) e[i] = 1;
    return e;
}

CubicForm cone_over_elliptic() { // x0^3 + x1^3 + x2^3, singular along a line
    TermMap t;
    t.emplace(mono({3, 0, 0, 0, 0}), Rat(1));
    t.emplace(mono({0, 3, 0, 0, 0}), Rat(1));
    t.emplace(mono({0, 0, 3, 0, 0}), Rat(1));
    return CubicForm::from_terms(std::move(t));
}

CubicForm triple_line() { // x0^3
    TermMap t;
    t.emplace(mono({3, 0, 0, 0, 0}), Rat(1));
    return CubicForm::from_terms(std::move(t));
}

bool is_squarefree(const Exps& e) {
    for (auto x : e)
        if (x > 1) return false;
    return true;
}

} // namespace

TEST_CASE("monomial listing is complete and graded-lex ordered") {
    CHECK(monomials_of_degree(0).size() == 1);
    CHECK(monomials_of_degree(0)[0] == mono({0, 0, 0, 0, 0}));
    CHECK(monomials_of_degree(1).size() == 5);
    CHECK(monomials_of_degree(1)[0] == mono({1, 0, 0, 0, 0}));
    CHECK(monomials_of_degree(1)[4] == mono({0, 0, 0, 0, 1}));
    CHECK(monomials_of_degree(3).size() == 35);
    CHECK(monomials_of_degree(3)[0] == mono({3, 0, 0, 0, 0}));
    CHECK(monomials_of_degree(3)[1] == mono({2, 1, 0, 0, 0}));
    CHECK(monomials_of_degree(3)[34] == mono({0, 0, 0, 0, 3}));
    CHECK(monomials_of_degree(6).size() == 210);

    MonoBefore before;
    for (unsigned d = 0; d <= 6; ++d) {
        const auto& list = monomials_of_degree(d);
        for (std::size_t i = 0; i + 1 < list.size(); ++i) CHECK(before(list[i], list[i + 1]));
        for (std::size_t i = 0; i < list.size(); ++i) CHECK(monomial_index(list[i]) == i);
    }
    CHECK_THROWS_AS(monomials_of_degree(7), Unsupported);
}

TEST_CASE("monomial names are readable and unique") {
    CHECK(monomial_name(mono({0, 0, 0, 0, 0})) == "1");
    CHECK(monomial_name(mono({2, 1, 0, 0, 0})) == "x0^2*x1");
    CHECK(monomial_name(mono({0, 1, 0, 1, 1})) == "x1*x3*x4");
}

TEST_CASE("partial derivatives of the classic forms") {
    auto fermat = jacobian_generators(fermat_cubic());
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(fermat[i].size() == 1);
        Exps sq{};
        sq[i] = 2;
        CHECK(fermat[i].at(sq) == Rat(3));
    }

    auto cusp = jacobian_generators(triple_line());
    REQUIRE(cusp[0].size() == 1);
    CHECK(cusp[0].at(mono({2, 0, 0, 0, 0})) == Rat(3));
    for (std::size_t i = 1; i < 5; ++i) CHECK(cusp[i].empty());

    TermMap t;
    t.emplace(mono({2, 1, 0, 0, 0}), Rat(1)); // x0^2*x1
    auto mixed = jacobian_generators(CubicForm::from_terms(std::move(t)));
    CHECK(mixed[0].at(mono({1, 1, 0, 0, 0})) == Rat(2));
    CHECK(mixed[1].at(mono({2, 0, 0, 0, 0})) == Rat(1));
    for (std::size_t i = 2; i < 5; ++i) CHECK(mixed[i].empty());
}

TEST_CASE("Fermat quotient bases are the square-free monomials") {
    JacobianRing ring(fermat_cubic());

    const auto& b3 = ring.basis(3);
    REQUIRE(b3.standard_monomials.size() == 10);
    for (const auto& m : b3.standard_monomials) CHECK(is_squarefree(m));

    const auto& b5 = ring.basis(5);
    REQUIRE(b5.standard_monomials.size() == 1);
    CHECK(b5.standard_monomials[0] == subset_mono({0, 1, 2, 3, 4}));

    CHECK(ring.basis(6).standard_monomials.empty());
    CHECK(ring.hilbert() == std::array<std::size_t, 7>{1, 5, 10, 10, 5, 1, 0});
    CHECK(ring.smooth());
}

TEST_CASE("singular forms are detected through their Hilbert function") {
    JacobianRing cone(cone_over_elliptic());
    CHECK(cone.hilbert() == std::array<std::size_t, 7>{1, 5, 12, 20, 28, 36, 44});
    CHECK_FALSE(cone.smooth());

    JacobianRing cusp(triple_line());
    CHECK(cusp.hilbert() == std::array<std::size_t, 7>{1, 5, 14, 30, 55, 91, 140});
    CHECK(cusp.hilbert()[6] > 0);
    CHECK_FALSE(cusp.smooth());
}

TEST_CASE("perturbed Fermat stays smooth") {
    TermMap t = fermat_cubic().terms;
    t.emplace(subset_mono({0, 1, 2}), Rat(1));
    JacobianRing ring(CubicForm::from_terms(std::move(t)));
    CHECK(ring.smooth());
}

TEST_CASE("normal form is idempotent on standard monomials") {
    JacobianRing ring(random_cubic(11, 5));
    for (unsigned k = 0; k <= 6; ++k) {
        const auto& qb = ring.basis(k);
        const std::size_t dim = qb.standard_monomials.size();
        for (std::size_t s = 0; s < dim; ++s) {
            TermMap t;
            t.emplace(qb.standard_monomials[s], Rat(1));
            auto coords = ring.element_from_terms(t, k).coords;
            for (std::size_t i = 0; i < dim; ++i) CHECK(coords[i] == Rat(i == s ? 1 : 0));
        }
    }
}

TEST_CASE("normal form annihilates exactly the ideal slice") {
    JacobianRing ring(random_cubic(23, 5));
    auto gens = jacobian_generators(ring.form());
    for (unsigned k = 2; k <= 5; ++k) {
        const auto& qb = ring.basis(k);
        // every m * dF/dx_i reduces to zero
        for (const auto& gen : gens) {
            if (gen.empty()) continue;
            for (const auto& m : monomials_of_degree(k - 2)) {
                TermMap prod;
                for (const auto& [ge, gc] : gen) {
                    auto [it, fresh] = prod.emplace(mono_mul(m, ge), gc);
                    if (!fresh) it->second += gc;
                }
                for (const auto& c : ring.element_from_terms(prod, k).coords) CHECK(sgn(c) == 0);
            }
        }
        // and the counts add up: dim slice + dim quotient = dim of the space
        CHECK(qb.reduce.rows() == qb.standard_monomials.size());
        CHECK(qb.reduce.cols() == monomials_of_degree(k).size());
    }
}

TEST_CASE("Gorenstein symmetry holds for smooth samples") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 3; ++trial) {
        JacobianRing ring(random_cubic(rng, 5));
        if (!ring.smooth()) continue;
        auto h = ring.hilbert();
        for (unsigned k = 0; k <= 5; ++k) CHECK(h[k] == h[5 - k]);
    }
}

TEST_CASE("Fermat multiplication follows the square-free subset rule") {
    JacobianRing ring(fermat_cubic());

    auto elem = [&](std::initializer_list<int> idx, unsigned deg) {
        TermMap t;
        t.emplace(subset_mono(idx), Rat(1));
        return ring.element_from_terms(t, deg);
    };

    // x012 * x3 = x0123
    auto p1 = ring.multiply(elem({0, 1, 2}, 3), elem({3}, 1));
    CHECK(p1 == elem({0, 1, 2, 3}, 4));

    // x012 * x0 = 0 (the square kills it)
    auto p2 = ring.multiply(elem({0, 1, 2}, 3), elem({0}, 1));
    for (const auto& c : p2.coords) CHECK(sgn(c) == 0);

    // x012 * x34 = x01234, the socle generator
    auto p3 = ring.multiply(elem({0, 1, 2}, 3), elem({3, 4}, 2));
    REQUIRE(p3.coords.size() == 1);
    CHECK(p3.coords[0] == Rat(1));

    // exhaustive check of the subset rule on R_2 x R_3
    const auto& b2 = ring.basis(2).standard_monomials;
    const auto& b3 = ring.basis(3).standard_monomials;
    for (std::size_t i = 0; i < b2.size(); ++i)
        for (std::size_t j = 0; j < b3.size(); ++j) {
            RingElement a{2, std::vector<Rat>(b2.size(), Rat(0))};
            RingElement b{3, std::vector<Rat>(b3.size(), Rat(0))};
            a.coords[i] = 1;
            b.coords[j] = 1;
            auto prod = ring.multiply(a, b);
            const bool disjoint = is_squarefree(mono_mul(b2[i], b3[j]));
            CHECK(prod.coords[0] == Rat(disjoint ? 1 : 0));
        }

    CHECK_THROWS_AS(ring.multiply(elem({0, 1, 2}, 3), elem({0, 1, 2, 3}, 4)), InvalidInput);
}

TEST_CASE("ring multiplication is bilinear, commutative, and associative") {
    JacobianRing ring(random_cubic(47, 5));
    REQUIRE(ring.smooth());
    SplitMix64 rng(48);

    auto random_elem = [&](unsigned deg) {
        const std::size_t dim = ring.basis(deg).standard_monomials.size();
        RingElement e{deg, {}};
        for (std::size_t i = 0; i < dim; ++i) e.coords.push_back(rat_of(rng.symmetric(9)));
        return e;
    };

    for (int trial = 0; trial < 4; ++trial) {
        auto a = random_elem(1), a2 = random_elem(1), b = random_elem(2), c = random_elem(1);

        auto ab = ring.multiply(a, b);
        auto ba = ring.multiply(b, a);
        CHECK(ab == ba);

        // (a + a2) * b = a*b + a2*b
        RingElement sum{1, {}};
        for (std::size_t i = 0; i < 5; ++i) sum.coords.push_back(a.coords[i] + a2.coords[i]);
        auto lhs = ring.multiply(sum, b);
        auto r1 = ring.multiply(a, b);
        auto r2 = ring.multiply(a2, b);
        for (std::size_t i = 0; i < lhs.coords.size(); ++i)
            CHECK(lhs.coords[i] == r1.coords[i] + r2.coords[i]);

        // (a*b)*c = a*(b*c), total degree 4
        CHECK(ring.multiply(ab, c) == ring.multiply(a, ring.multiply(b, c)));

        // scalar pull-out
        RingElement scaled{2, {}};
        for (const auto& x : b.coords) scaled.coords.push_back(x * rat_of(7, 3));
        auto sb = ring.multiply(a, scaled);
        for (std::size_t i = 0; i < sb.coords.size(); ++i)
            CHECK(sb.coords[i] == ab.coords[i] * rat_of(7, 3));
    }
}

TEST_CASE("the degree-1 by degree-4 pairing is perfect on smooth forms") {
    JacobianRing fermat(fermat_cubic());
    auto m = fermat.pairing_r1_r4();
    REQUIRE(m.rows() == 5);
    REQUIRE(m.cols() == 5);
    // Fermat: x_i pairs only with the complementary square-free 4-subset
    for (std::size_t i = 0; i < 5; ++i) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < 5; ++j)
            if (sgn(m.at(i, j)) != 0) ++nonzero;
        CHECK(nonzero == 1);
    }
    CHECK(is_nondegenerate(m));

    JacobianRing rnd(random_cubic(53, 5));
    REQUIRE(rnd.smooth());
    CHECK(echelonize(rnd.pairing_r1_r4()).rank == 5);

    JacobianRing sing(triple_line());
    CHECK_THROWS_AS(sing.pairing_r1_r4(), NotSmooth);
}

TEST_CASE("random cubics are reproducible and almost always smooth") {
    auto a = random_cubic(7, 5);
    auto b = random_cubic(7, 5);
    CHECK(a == b);
    CHECK_THROWS_AS(random_cubic(7, 0), InvalidInput);

    // frozen draw sequence for seed 7, bound 5, in listing order
    const std::vector<long long> expected = {-3, -5, -5, -5, 2,  2,  -4, 4, -3, 3,  -5, 4,
                                             4,  -4, 0,  1,  -4, 3,  4,  1, -2, 0,  0,  -2,
                                             -1, -4, 1,  -1, 2,  -3, 5,  0, -3, 3,  0};
    const auto& mons = monomials_of_degree(3);
    for (std::size_t i = 0; i < mons.size(); ++i) {
        auto it = a.terms.find(mons[i]);
        if (expected[i] == 0)
            CHECK(it == a.terms.end());
        else {
            REQUIRE(it != a.terms.end());
            CHECK(it->second == rat_of(expected[i]));
        }
    }

    // drawing from a shared stream: sample 1 starts where sample 0 stopped
    SplitMix64 stream(7);
    auto s0 = random_cubic(stream, 5);
    CHECK(s0 == a);
    auto s1 = random_cubic(stream, 5);
    const std::vector<long long> next10 = {4, 3, 2, -1, 4, -4, 5, 5, -2, -3};
    for (std::size_t i = 0; i < next10.size(); ++i) {
        auto it = s1.terms.find(mons[i]);
        if (next10[i] == 0)
            CHECK(it == s1.terms.end());
        else {
            REQUIRE(it != s1.terms.end());
            CHECK(it->second == rat_of(next10[i]));
        }
    }
}

TEST_CASE("cubic forms round-trip through their JSON format") {
    auto f = random_cubic(99, 7);
    auto j = cubic_to_json(f);
    CHECK(j["vars"] == 5);
    CHECK(j["degree"] == 3);
    CHECK(cubic_from_json(j) == f);

    // canonical order: terms sorted by the monomial listing
    const auto& terms = j["terms"];
    MonoBefore before;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        Exps a{}, b{};
        for (std::size_t k = 0; k < 5; ++k) {
            a[k] = terms[i]["exps"][k].get<std::uint8_t>();
            b[k] = terms[i + 1]["exps"][k].get<std::uint8_t>();
        }
        CHECK(before(a, b));
    }

    auto reject = [](const char* text) {
        CHECK_THROWS_AS(cubic_from_json(nlohmann::json::parse(text)), InvalidInput);
    };
    reject(R"({"vars":4,"degree":3,"terms":[]})");
    reject(R"({"vars":5,"degree":2,"terms":[]})");
    reject(R"({"vars":5,"degree":3,"terms":[{"exps":[1,1,1,0],"coeff":"1"}]})");
    reject(R"({"vars":5,"degree":3,"terms":[{"exps":[1,1,1,1,0],"coeff":"1"}]})");
    reject(R"({"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":1}]})");
    reject(R"({"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"x"}]})");
    reject(
        R"({"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"1"},{"exps":[3,0,0,0,0],"coeff":"2"}]})");

    // zero coefficients normalize away instead of being stored
    auto z = cubic_from_json(
        nlohmann::json::parse(R"({"vars":5,"degree":3,"terms":[{"exps":[3,0,0,0,0],"coeff":"0"}]})"));
    CHECK(z.terms.empty());

    // rational coefficients survive the round trip
    auto q = cubic_from_json(nlohmann::json::parse(
        R"({"vars":5,"degree":3,"terms":[{"exps":[1,1,1,0,0],"coeff":"-2/3"}]})"));
    CHECK(q.terms.at(subset_mono({0, 1, 2})) == rat_of(-2, 3));
    CHECK(cubic_from_json(cubic_to_json(q)) == q);
}

TEST_CASE("a short random sweep is mostly smooth and fully reproducible") {
    SplitMix64 rng(7);
    int smooth_count = 0;
    const int samples = 8;
    for (int i = 0; i < samples; ++i) {
        JacobianRing ring(random_cubic(rng, 5));
        if (ring.smooth()) ++smooth_count;
    }
    CHECK(smooth_count == samples); // frozen: seed 7, bound 5 gives no singular form this early
}
