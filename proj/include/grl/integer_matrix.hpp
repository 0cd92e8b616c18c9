#pragma once

#include <cstddef>
#include <vector>

#include "grl/numeric.hpp"

namespace grl {

// Dense matrix over Z with arbitrary-precision entries. Intermediate entry
// growth in Smith reduction makes fixed-width integers unusable here.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntegerMatrix& other) const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntegerMatrix& m);

struct SmithDecomposition {
    IntegerMatrix u;  // rows x rows, unimodular
    IntegerMatrix d;  // diagonal, d_1 | d_2 | ..., all >= 0
    IntegerMatrix v;  // cols x cols, unimodular
};

// U * m * V = D with the divisibility chain on the diagonal. Pivots are
// chosen by minimal absolute value to limit entry blow-up.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// The nonzero diagonal entries of D, in order.
std::vector<Int> invariant_factors(const IntegerMatrix& m);

std::size_t integer_rank(const IntegerMatrix& m);

// Basis of ker(m) as a direct summand of Z^cols (columns of the result).
// Comes out of the same Smith decomposition.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& m);

} // namespace grl
