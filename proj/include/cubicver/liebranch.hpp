#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cubicver/errors.hpp"

namespace cubicver {

// Root systems and the Weyl dimension formula, plus the table of maximal
// connected semisimple subgroups of E6 with the branching of the
// 27-dimensional representation. Node numbering follows Bourbaki throughout;
// rows are identified by invariant content (dimension, duality, standard
// descriptions), so the numbering convention never affects a verdict.

enum class Family { A, C, D, E, F, G };

struct SimpleType {
    Family family;
    unsigned rank;
    bool operator==(const SimpleType&) const = default;
    bool operator<(const SimpleType& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
};

// "A2", "C4", "D5", "E6", "F4", "G2", ... -> SimpleType; anything outside the
// supported list {A1, A2, A5, C4, D5, E6, F4, G2} -> Unsupported
SimpleType simple_type_of(const std::string& name);
std::string type_name(SimpleType t);

// coordinates in the fundamental-weight basis; dominant iff all >= 0
using Weight = std::vector<long long>;
bool is_dominant(const Weight& w);

struct RootSystem {
    SimpleType type;
    // cartan[i][j] = <alpha_i, alpha_j-check>, so row i is the simple root
    // alpha_i written in the fundamental-weight basis
    std::vector<std::vector<int>> cartan;
    // symmetrizer d with d[j]*cartan[i][j] = d[i]*cartan[j][i]; d[i] is half
    // the squared length of alpha_i, short roots normalized to 1
    std::vector<int> sym_diag;
    // positive roots in simple-root coordinates, sorted by height then lex
    std::vector<std::vector<int>> positive;
};

// closure of the simple roots under root addition; cached per type
const RootSystem& positive_roots(SimpleType t);

// dimension of the irreducible representation with highest weight lambda,
// by the Weyl product formula with exact integer arithmetic
mpz_class weyl_dim(SimpleType t, const Weight& lambda);

// dominant representative of -lambda (repeated simple reflections); the
// irreducible representation is self-dual iff this returns lambda itself
Weight dual_weight(SimpleType t, const Weight& lambda);

// why a table row cannot contain the monodromy group, per the case analysis
enum class Elimination { SelfDual, NoBigSummand, AlmostFaithfulComplement, G2Containment };

std::string elimination_name(Elimination e);
Elimination elimination_of(const std::string& name);

struct BranchRow {
    std::vector<SimpleType> subgroup;          // the simple factors of H
    std::vector<std::vector<Weight>> summands; // per summand, one weight per factor
    std::vector<unsigned> expected_dims;
    bool expected_self_dual;
    Elimination elimination; // declared metadata, validated by rule_out_subgroups
};

struct BranchTable {
    std::vector<BranchRow> rows;
    std::string sha256_hex; // checksum of the raw file bytes; empty for in-memory tables
};

// short display name of a row's subgroup, e.g. "A2xG2"
std::string row_name(const BranchRow& row);

// product over the factors of weyl_dim for one summand of a row
mpz_class summand_dim(const BranchRow& row, std::size_t k);

// strict structural parse; malformed input -> InvalidInput
BranchTable parse_branching_table(const std::string& json_text);

// read + checksum-pin + parse; wrong checksum or unreadable file -> InvalidInput
BranchTable load_branching_table(const std::string& path);

// data/branching_table.json under the working directory, then the build-time
// source-tree copy; same checksum pin
BranchTable load_default_branching_table();

// the checksum the shipped table must have
extern const char* const branching_table_sha256;

// one verified statement about one row ("D5", "A2xG2", ...) or about the
// ambient group ("E6"); never throws on a value mismatch, it records it
struct TableCheck {
    std::string row;
    std::string what; // "dims", "sum27", "self_dual", ...
    bool passed;
    std::string expected;
    std::string actual;
};

// recompute every summand dimension, the sum rule, and the self-duality flag
// of every row, plus the E6 facts (both 27-dimensional fundamental
// representations have dimension 27, are dual to each other, and neither is
// self-dual)
std::vector<TableCheck> verify_branching_table(const BranchTable& table);

// the lower bound for the rank of the big irreducible piece: sections of the
// adjoint-twisted line bundle + top cohomology + (d - 1) for surfaces
struct RankBound {
    unsigned h0_term;
    unsigned hd_term;
    unsigned d_minus_1;
    unsigned total() const { return h0_term + hd_term + d_minus_1; }
};
RankBound min_big_summand_rank();

struct EliminationCheck {
    std::string row;
    Elimination reason;
    bool passed;
    std::string detail;
};

struct EliminationOutcome {
    std::vector<EliminationCheck> rows; // one per table row, in table order
    // every non-self-dual row has at most one summand of dimension > threshold-1
    TableCheck big_summand_predicate;
    bool all_passed() const;
};

// replay the case analysis: each row must be eliminated by its declared
// reason, checked against the recomputed dims and duality; threshold is the
// minimal rank of the big summand
EliminationOutcome rule_out_subgroups(const BranchTable& table, unsigned threshold = 13);

} // namespace cubicver
