#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "cubicver/errors.hpp"
#include "cubicver/fp.hpp"
#include "cubicver/rational.hpp"

namespace cubicver {

// Dense row-major matrix with opaque basis labels on both axes. All matrices
// in this project are at most 350x210, where dense storage beats triplet
// lists in both memory and elimination speed, so dense is the only layout.
template <class S>
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<S> entries; // row-major, size = rows()*cols()

    LabeledMatrix() = default;

    LabeledMatrix(std::vector<std::string> rl, std::vector<std::string> cl, std::vector<S> e)
        : row_labels(std::move(rl)), col_labels(std::move(cl)), entries(std::move(e)) {
        if (entries.size() != row_labels.size() * col_labels.size())
            throw InvalidInput("matrix entry count does not match label counts");
        check_distinct(row_labels, "row");
        check_distinct(col_labels, "column");
    }

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }

    const S& at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
    S& at(std::size_t i, std::size_t j) { return entries[i * cols() + j]; }

    LabeledMatrix<S> transpose() const {
        std::vector<S> t(entries.size());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) t[j * rows() + i] = at(i, j);
        return LabeledMatrix<S>(col_labels, row_labels, std::move(t));
    }

private:
    static void check_distinct(const std::vector<std::string>& labels, const char* axis) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw InvalidInput(std::string("duplicate ") + axis + " label: " + l);
    }
};

using RatMatrix = LabeledMatrix<Rat>;
using FpMatrix = LabeledMatrix<Fp>;

// Anonymous numeric labels "r0","r1",... / "c0","c1",... for matrices whose
// bases carry no meaning of their own.
std::vector<std::string> numeric_labels(char prefix, std::size_t n);

RatMatrix rat_matrix_from_rows(const std::vector<std::vector<Rat>>& rows);

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v);

// Composition a∘b; inner dimensions must agree, labels come from the outer
// two axes.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

RatMatrix zero_matrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

} // namespace cubicver
