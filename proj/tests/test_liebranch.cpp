#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "cubicver/liebranch.hpp"
#include "cubicver/random.hpp"

using namespace cubicver;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string table_path() {
    return std::string(CUBICVER_DATA_DIR) + "/branching_table.json";
}

Weight random_dominant(SplitMix64& rng, unsigned rank) {
    Weight w(rank);
    for (auto& c : w) c = static_cast<long long>(rng.below(5));
    return w;
}

const std::vector<std::string> all_types = {"A1", "A2", "A5", "C4", "D5", "E6", "F4", "G2"};

const TableCheck& find_check(const std::vector<TableCheck>& checks, const std::string& row,
                             const std::string& what) {
    for (const auto& c : checks)
        if (c.row == row && c.what == what) return c;
    REQUIRE_MESSAGE(false, "no check ", row, "/", what);
    static TableCheck dummy;
    return dummy;
}

} // namespace

TEST_CASE("positive-root counts match the closed forms") {
    const std::map<std::string, std::size_t> want = {
        {"A1", 1}, {"A2", 3}, {"A5", 15}, {"C4", 16},
        {"D5", 20}, {"E6", 36}, {"F4", 24}, {"G2", 6},
    };
    for (const auto& [name, count] : want) {
        const RootSystem& rs = positive_roots(simple_type_of(name));
        CHECK(rs.positive.size() == count);

        // every root is a nonnegative combination of simple roots, listed in
        // graded lex order without repeats
        for (std::size_t k = 0; k < rs.positive.size(); ++k) {
            const auto& r = rs.positive[k];
            CHECK(*std::min_element(r.begin(), r.end()) >= 0);
            CHECK(std::accumulate(r.begin(), r.end(), 0) >= 1);
            if (k > 0) {
                const auto& prev = rs.positive[k - 1];
                const int hp = std::accumulate(prev.begin(), prev.end(), 0);
                const int hr = std::accumulate(r.begin(), r.end(), 0);
                CHECK((hp < hr || (hp == hr && prev < r)));
            }
        }
    }
}

TEST_CASE("small root systems are exactly right") {
    const RootSystem& a2 = positive_roots(simple_type_of("A2"));
    CHECK(a2.positive == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}});

    const RootSystem& g2 = positive_roots(simple_type_of("G2"));
    CHECK(g2.positive == std::vector<std::vector<int>>{
                             {0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});

    // highest roots, a strong cross-check on the whole closure
    CHECK(positive_roots(simple_type_of("E6")).positive.back() ==
          std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(positive_roots(simple_type_of("F4")).positive.back() ==
          std::vector<int>{2, 3, 4, 2});
    CHECK(positive_roots(simple_type_of("C4")).positive.back() ==
          std::vector<int>{2, 2, 2, 1});
    CHECK(positive_roots(simple_type_of("D5")).positive.back() ==
          std::vector<int>{1, 2, 2, 1, 1});
}

TEST_CASE("type names parse both ways and reject the unsupported") {
    for (const auto& name : all_types) CHECK(type_name(simple_type_of(name)) == name);
    CHECK_THROWS_AS(simple_type_of("B3"), Unsupported);
    CHECK_THROWS_AS(simple_type_of("E8"), Unsupported);
    CHECK_THROWS_AS(simple_type_of("A3"), Unsupported);
    CHECK_THROWS_AS(simple_type_of(""), Unsupported);
    CHECK_THROWS_AS(positive_roots(SimpleType{Family::D, 4}), Unsupported);
}

TEST_CASE("Weyl dimension anchors") {
    auto dim = [](const std::string& t, const Weight& w) {
        return weyl_dim(simple_type_of(t), w);
    };
    // trivial representation for every type
    for (const auto& name : all_types) {
        const SimpleType t = simple_type_of(name);
        CHECK(weyl_dim(t, Weight(t.rank, 0)) == 1);
    }

    CHECK(dim("A1", {1}) == 2);
    CHECK(dim("A2", {1, 0}) == 3);
    CHECK(dim("A2", {1, 1}) == 8);
    CHECK(dim("A2", {2, 0}) == 6);
    CHECK(dim("A2", {2, 2}) == 27);
    CHECK(dim("A5", {1, 0, 0, 0, 0}) == 6);
    CHECK(dim("A5", {0, 1, 0, 0, 0}) == 15);
    CHECK(dim("A5", {0, 0, 1, 0, 0}) == 20);
    CHECK(dim("A5", {0, 0, 0, 0, 1}) == 6);
    CHECK(dim("C4", {1, 0, 0, 0}) == 8);
    CHECK(dim("C4", {0, 1, 0, 0}) == 27);
    CHECK(dim("C4", {0, 0, 1, 0}) == 48);
    CHECK(dim("C4", {0, 0, 0, 1}) == 42);
    CHECK(dim("D5", {1, 0, 0, 0, 0}) == 10);
    CHECK(dim("D5", {0, 1, 0, 0, 0}) == 45);
    CHECK(dim("D5", {0, 0, 0, 1, 0}) == 16);
    CHECK(dim("D5", {0, 0, 0, 0, 1}) == 16);
    CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
    CHECK(dim("E6", {0, 1, 0, 0, 0, 0}) == 78);
    CHECK(dim("E6", {0, 0, 0, 0, 0, 1}) == 27);
    CHECK(dim("F4", {1, 0, 0, 0}) == 52);
    CHECK(dim("F4", {0, 0, 0, 1}) == 26);
    CHECK(dim("G2", {1, 0}) == 7);
    CHECK(dim("G2", {0, 1}) == 14);
    CHECK(dim("G2", {2, 0}) == 27);
    CHECK(dim("G2", {3, 0}) == 77);
    CHECK(dim("G2", {0, 2}) == 77);

    // a value past 64 bits, to pin the big-integer path; the weight is 4*rho,
    // so every Weyl factor is exactly 5 and the product is 5^36
    const mpz_class huge = dim("E6", {4, 4, 4, 4, 4, 4});
    CHECK(mpz_sizeinbase(huge.get_mpz_t(), 2) == 84);
    CHECK(huge == mpz_class("14551915228366851806640625"));
}

TEST_CASE("non-dominant and ill-sized weights are rejected") {
    const SimpleType a2 = simple_type_of("A2");
    CHECK_THROWS_AS(weyl_dim(a2, {-1, 0}), InvalidWeight);
    CHECK_THROWS_AS(weyl_dim(a2, {1}), InvalidWeight);
    CHECK_THROWS_AS(weyl_dim(a2, {1, 0, 0}), InvalidWeight);
    CHECK_THROWS_AS(dual_weight(a2, {0, -2}), InvalidWeight);
    CHECK_THROWS_AS(dual_weight(a2, {}), InvalidWeight);
}

TEST_CASE("duality involution on the named weights") {
    auto dual = [](const std::string& t, const Weight& w) {
        return dual_weight(simple_type_of(t), w);
    };
    CHECK(dual("A2", {1, 0}) == Weight{0, 1});
    CHECK(dual("A2", {2, 2}) == Weight{2, 2});
    CHECK(dual("A5", {0, 0, 0, 0, 1}) == Weight{1, 0, 0, 0, 0});
    CHECK(dual("A5", {0, 1, 0, 0, 0}) == Weight{0, 0, 0, 1, 0});
    CHECK(dual("D5", {0, 0, 0, 1, 0}) == Weight{0, 0, 0, 0, 1});
    CHECK(dual("D5", {0, 0, 0, 0, 1}) == Weight{0, 0, 0, 1, 0});
    CHECK(dual("D5", {1, 0, 0, 0, 0}) == Weight{1, 0, 0, 0, 0});
    CHECK(dual("E6", {1, 0, 0, 0, 0, 0}) == Weight{0, 0, 0, 0, 0, 1});
    CHECK(dual("E6", {0, 1, 0, 0, 0, 0}) == Weight{0, 1, 0, 0, 0, 0});
    // minus the longest element acts trivially for C4, F4, G2
    CHECK(dual("C4", {1, 2, 0, 3}) == Weight{1, 2, 0, 3});
    CHECK(dual("F4", {1, 2, 3, 4}) == Weight{1, 2, 3, 4});
    CHECK(dual("G2", {2, 0}) == Weight{2, 0});
}

TEST_CASE("duality is an involution and preserves dimension, randomized") {
    SplitMix64 rng(101);
    for (const auto& name : all_types) {
        const SimpleType t = simple_type_of(name);
        for (int trial = 0; trial < 50; ++trial) {
            const Weight w = random_dominant(rng, t.rank);
            const Weight d = dual_weight(t, w);
            CHECK(is_dominant(d));
            CHECK(dual_weight(t, d) == w);
            CHECK(weyl_dim(t, w) == weyl_dim(t, d));
            if (name == "C4" || name == "F4" || name == "G2") CHECK(d == w);
        }
    }
}

TEST_CASE("the rank bound constants") {
    const RankBound b = min_big_summand_rank();
    CHECK(b.h0_term == 6);
    CHECK(b.hd_term == 6);
    CHECK(b.d_minus_1 == 1);
    CHECK(b.total() == 13);
}

TEST_CASE("the shipped table loads, checks out, and pins its checksum") {
    const BranchTable table = load_branching_table(table_path());
    CHECK(table.sha256_hex == branching_table_sha256);
    REQUIRE(table.rows.size() == 8);

    const auto checks = verify_branching_table(table);
    CHECK(checks.size() == 8 * 3 + 3);
    for (const auto& c : checks) {
        INFO(c.row, "/", c.what, ": expected ", c.expected, ", actual ", c.actual);
        CHECK(c.passed);
    }

    CHECK(find_check(checks, "D5", "dims").actual == "1+10+16");
    CHECK(find_check(checks, "A2xA2xA2", "dims").actual == "9+9+9");
    CHECK(find_check(checks, "A1xA5", "dims").actual == "12+15");
    CHECK(find_check(checks, "A2xG2", "dims").actual == "21+6");
    CHECK(find_check(checks, "D5", "self_dual").actual == "false");
    CHECK(find_check(checks, "C4", "self_dual").actual == "true");
    CHECK(find_check(checks, "E6", "not_self_dual").passed);

    // every expected-dimension column sums to 27 as stored, not only as computed
    for (const auto& row : table.rows) {
        unsigned sum = 0;
        for (unsigned d : row.expected_dims) sum += d;
        CHECK(sum == 27);
        CHECK(row.expected_dims.size() == row.summands.size());
    }
}

TEST_CASE("summand dimensions multiply across factors") {
    const BranchTable table = load_branching_table(table_path());
    const BranchRow* a2g2 = nullptr;
    for (const auto& row : table.rows)
        if (row_name(row) == "A2xG2") a2g2 = &row;
    REQUIRE(a2g2 != nullptr);
    CHECK(summand_dim(*a2g2, 0) == 21);
    CHECK(summand_dim(*a2g2, 1) == 6);
    CHECK_THROWS_AS(summand_dim(*a2g2, 2), InvalidInput);
}

TEST_CASE("verification records mismatches instead of throwing") {
    BranchTable table = load_branching_table(table_path());

    SUBCASE("a wrong expected dimension fails only the dims check") {
        table.rows[1].expected_dims = {26};
        const auto checks = verify_branching_table(table);
        CHECK_FALSE(find_check(checks, "C4", "dims").passed);
        CHECK(find_check(checks, "C4", "dims").expected == "26");
        CHECK(find_check(checks, "C4", "dims").actual == "27");
        CHECK(find_check(checks, "C4", "sum27").passed);
        CHECK(find_check(checks, "C4", "self_dual").passed);
    }

    SUBCASE("a wrong summand weight fails dims and the sum rule") {
        table.rows[0].summands[1][0] = {0, 1, 0, 0, 0}; // 45-dimensional instead of 10
        const auto checks = verify_branching_table(table);
        CHECK_FALSE(find_check(checks, "D5", "dims").passed);
        CHECK(find_check(checks, "D5", "dims").actual == "1+45+16");
        CHECK_FALSE(find_check(checks, "D5", "sum27").passed);
        CHECK(find_check(checks, "D5", "sum27").actual == "62");
    }

    SUBCASE("a wrong duality flag fails the duality check") {
        table.rows[0].expected_self_dual = true;
        const auto checks = verify_branching_table(table);
        CHECK_FALSE(find_check(checks, "D5", "self_dual").passed);
        CHECK(find_check(checks, "D5", "self_dual").actual == "false");
    }
}

TEST_CASE("the elimination replay assigns the declared reason to every row") {
    const BranchTable table = load_branching_table(table_path());
    const EliminationOutcome out = rule_out_subgroups(table, min_big_summand_rank().total());
    REQUIRE(out.rows.size() == 8);
    CHECK(out.all_passed());
    CHECK(out.big_summand_predicate.passed);

    const std::map<std::string, Elimination> want = {
        {"D5", Elimination::AlmostFaithfulComplement},
        {"C4", Elimination::SelfDual},
        {"F4", Elimination::SelfDual},
        {"A2", Elimination::SelfDual},
        {"G2", Elimination::SelfDual},
        {"A2xG2", Elimination::G2Containment},
        {"A1xA5", Elimination::AlmostFaithfulComplement},
        {"A2xA2xA2", Elimination::NoBigSummand},
    };
    for (const auto& check : out.rows) {
        INFO(check.row, ": ", check.detail);
        CHECK(check.passed);
        CHECK(check.reason == want.at(check.row));
    }

    // the G2 case records the dimension arithmetic of the containment step
    for (const auto& check : out.rows)
        if (check.row == "A2xG2") {
            CHECK(check.detail.find("21") != std::string::npos);
            CHECK(check.detail.find("7") != std::string::npos);
        }
}

TEST_CASE("misdeclared elimination metadata is caught") {
    const BranchTable clean = load_branching_table(table_path());
    auto with_tag = [&](std::size_t row, Elimination tag) {
        BranchTable t = clean;
        t.rows[row].elimination = tag;
        return t;
    };
    auto row_check = [](const EliminationOutcome& out, const std::string& name) {
        for (const auto& c : out.rows)
            if (c.row == name) return c;
        REQUIRE(false);
        return EliminationCheck{};
    };

    // D5 is not self-dual and has a 16-dimensional summand
    CHECK_FALSE(row_check(rule_out_subgroups(with_tag(0, Elimination::SelfDual)), "D5").passed);
    CHECK_FALSE(
        row_check(rule_out_subgroups(with_tag(0, Elimination::NoBigSummand)), "D5").passed);
    CHECK_FALSE(
        row_check(rule_out_subgroups(with_tag(0, Elimination::G2Containment)), "D5").passed);
    // C4 is self-dual, so the non-self-dual reasons cannot apply
    CHECK_FALSE(
        row_check(rule_out_subgroups(with_tag(1, Elimination::AlmostFaithfulComplement)), "C4")
            .passed);
    // A1xA5 has no G2 factor
    CHECK_FALSE(
        row_check(rule_out_subgroups(with_tag(6, Elimination::G2Containment)), "A1xA5").passed);
    // A2xA2xA2 has no big summand to host the big piece
    CHECK_FALSE(
        row_check(rule_out_subgroups(with_tag(7, Elimination::AlmostFaithfulComplement)),
                  "A2xA2xA2")
            .passed);

    CHECK_THROWS_AS(rule_out_subgroups(clean, 0), InvalidInput);
}

TEST_CASE("the big-summand predicate flags a bad synthetic row") {
    BranchTable table;
    BranchRow row;
    row.subgroup = {simple_type_of("A5")};
    row.summands = {{{0, 0, 1, 0, 0}}, {{0, 1, 0, 0, 0}}}; // dims 20 and 15
    row.expected_dims = {20, 15};
    row.expected_self_dual = false;
    row.elimination = Elimination::AlmostFaithfulComplement;
    table.rows.push_back(row);

    const EliminationOutcome out = rule_out_subgroups(table, 13);
    CHECK_FALSE(out.big_summand_predicate.passed);
    CHECK(out.big_summand_predicate.actual.find("max 2") != std::string::npos);
    CHECK_FALSE(out.rows[0].passed); // two big summands, not one
    CHECK_FALSE(out.all_passed());
}

TEST_CASE("table parsing rejects malformed documents") {
    const std::string good = read_file(table_path());
    CHECK_NOTHROW(parse_branching_table(good));

    CHECK_THROWS_AS(parse_branching_table("not json at all"), InvalidInput);
    CHECK_THROWS_AS(parse_branching_table("[1,2,3]"), InvalidInput);
    CHECK_THROWS_AS(parse_branching_table(R"({"version": 2, "rows": []})"), InvalidInput);
    CHECK_THROWS_AS(parse_branching_table(R"({"version": 1, "rows": []})"), InvalidInput);
    CHECK_THROWS_AS(parse_branching_table(R"({"version": 1, "rows": [{}], "zzz": 0})"),
                    InvalidInput);

    auto one_row = [](const std::string& row) {
        return R"({"version": 1, "rows": [)" + row + "]}";
    };
    const std::string base = R"({"subgroup": ["A2"], "summands": [[[2, 2]]],
        "dims": [27], "self_dual": true, "elimination": "SelfDual"})";
    CHECK_NOTHROW(parse_branching_table(one_row(base)));

    // each structural defect in turn
    for (const std::string& bad : {
             R"({"subgroup": ["A2"], "summands": [[[2, 2]]], "dims": [27],
                 "self_dual": true})",
             R"({"subgroup": ["B9"], "summands": [[[2, 2]]], "dims": [27],
                 "self_dual": true, "elimination": "SelfDual"})",
             R"({"subgroup": ["A2"], "summands": [[[2, 2, 2]]], "dims": [27],
                 "self_dual": true, "elimination": "SelfDual"})",
             R"({"subgroup": ["A2"], "summands": [[[2, -2]]], "dims": [27],
                 "self_dual": true, "elimination": "SelfDual"})",
             R"({"subgroup": ["A2"], "summands": [[[2, 2]]], "dims": [27, 1],
                 "self_dual": true, "elimination": "SelfDual"})",
             R"({"subgroup": ["A2"], "summands": [[[2, 2]]], "dims": [0],
                 "self_dual": true, "elimination": "SelfDual"})",
             R"({"subgroup": ["A2"], "summands": [[[2, 2]]], "dims": [27],
                 "self_dual": "yes", "elimination": "SelfDual"})",
             R"({"subgroup": ["A2"], "summands": [[[2, 2]]], "dims": [27],
                 "self_dual": true, "elimination": "BecauseISaidSo"})",
             R"({"subgroup": ["A2"], "summands": [[[2, 2]]], "dims": [27],
                 "self_dual": true, "elimination": "SelfDual", "extra": 1})",
             R"({"subgroup": [], "summands": [[[2, 2]]], "dims": [27],
                 "self_dual": true, "elimination": "SelfDual"})",
         }) {
        INFO(bad);
        CHECK_THROWS_AS(parse_branching_table(one_row(bad)), InvalidInput);
    }
}

TEST_CASE("the checksum pin rejects modified and missing files") {
    const std::string good = read_file(table_path());

    std::string tampered = good;
    const auto pos = tampered.find("\"dims\": [1, 10, 16]");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 19, "\"dims\": [1, 10, 17]");

    const std::string tmp = "tampered_branching_table.json";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << tampered;
    }
    CHECK_THROWS_AS(load_branching_table(tmp), InvalidInput);
    std::remove(tmp.c_str());

    CHECK_THROWS_AS(load_branching_table("no_such_file.json"), InvalidInput);

    // the default loader falls back to the built-in path when the working
    // directory has no copy
    const BranchTable table = load_default_branching_table();
    CHECK(table.rows.size() == 8);
}
