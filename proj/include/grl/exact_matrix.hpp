#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grl/field.hpp"

namespace grl {

// Dense matrix over Q or F_p. Entries are kept in field-canonical form.
// Everything here is exact; there is no floating point anywhere.
class ExactMatrix {
public:
    ExactMatrix() : field_(Field::fp(2)), rows_(0), cols_(0) {}
    ExactMatrix(Field field, std::size_t rows, std::size_t cols);
    ExactMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static ExactMatrix identity(Field field, std::size_t n);
    static ExactMatrix zero(Field field, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rat& v) {
        entries_[i * cols_ + j] = field_normalize(field_, v);
    }
    ExactScalar scalar_at(std::size_t i, std::size_t j) const {
        return ExactScalar(field_, at(i, j));
    }

    bool is_zero() const;
    bool operator==(const ExactMatrix& other) const;
    bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

// Kronecker product; rank multiplies, which is what tensoring directed
// systems needs.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b);

// Horizontal concatenation [a | b].
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);

std::size_t rank(const ExactMatrix& m);

// Rank of the product ms[k-1] * ... * ms[0]; the list is in application
// order (first map first). Throws DimensionMismatch if shapes do not chain.
std::size_t rank_of_composite(const std::vector<ExactMatrix>& ms);

// Columns form a basis of the kernel.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Columns form a basis of the column space.
ExactMatrix image_basis(const ExactMatrix& m);

// One solution of A x = b, if any.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// Coordinates of the columns of `vectors` in the column basis `basis`
// (basis columns must be independent). Returns nullopt if some column is
// not in the span.
std::optional<ExactMatrix> coordinates_in_basis(const ExactMatrix& basis, const ExactMatrix& vectors);

} // namespace grl
