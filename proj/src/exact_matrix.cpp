#include "grl/exact_matrix.hpp"

#include <algorithm>

namespace grl {

namespace {

void require_same_field(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.field() != b.field())
        throw FieldMismatch("matrix fields differ: " + a.field().name() + " vs " + b.field().name());
}

// Row echelon form with full pivot bookkeeping. Returns pivot columns.
// Works over any of our fields since they are exact.
struct Echelon {
    ExactMatrix m;
    std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(ExactMatrix m) {
    const Field f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Rat tmp = m.at(row, j);
                m.set(row, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        }
        Rat inv = field_inv(f, m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.set(row, j, field_mul(f, m.at(row, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, field_sub(f, m.at(i, j), field_mul(f, factor, m.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

} // namespace

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows x cols");
    for (auto& e : entries_) e = field_normalize(field_, e);
}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

ExactMatrix ExactMatrix::zero(Field field, std::size_t rows, std::size_t cols) {
    return ExactMatrix(field, rows, cols);
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& r) { return r == 0; });
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix addition shape mismatch");
    ExactMatrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, field_add(a.field(), a.at(i, j), b.at(i, j)));
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix subtraction shape mismatch");
    ExactMatrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, field_sub(a.field(), a.at(i, j), b.at(i, j)));
    return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
    ExactMatrix r(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                r.set(i, j, field_add(a.field(), r.at(i, j),
                                      field_mul(a.field(), a.at(i, k), b.at(k, j))));
            }
        }
    return r;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    ExactMatrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l,
                          field_mul(a.field(), a.at(i, j), b.at(k, l)));
        }
    return r;
}

ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    ExactMatrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return r;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("hconcat row mismatch");
    ExactMatrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

std::size_t rank(const ExactMatrix& m) {
    return row_reduce(m).pivot_cols.size();
}

std::size_t rank_of_composite(const std::vector<ExactMatrix>& ms) {
    if (ms.empty()) throw DimensionMismatch("empty composite");
    ExactMatrix acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (ms[i].cols() != acc.rows())
            throw DimensionMismatch("composite factor " + std::to_string(i) + " does not chain");
        acc = ms[i] * acc;
    }
    return rank(acc);
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
    Echelon e = row_reduce(m);
    const Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    ExactMatrix basis(f, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.set(fc, k, Rat(1));
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            basis.set(e.pivot_cols[r], k, field_neg(f, e.m.at(r, fc)));
    }
    return basis;
}

ExactMatrix image_basis(const ExactMatrix& m) {
    Echelon e = row_reduce(m);
    ExactMatrix basis(m.field(), m.rows(), e.pivot_cols.size());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            basis.set(i, k, m.at(i, e.pivot_cols[k]));
    return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("solve shape mismatch");
    Echelon e = row_reduce(hconcat(a, b));
    // Any pivot landing in the b-block marks an inconsistent system.
    for (auto c : e.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    ExactMatrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(e.pivot_cols[r], j, e.m.at(r, a.cols() + j));
    return x;
}

std::optional<ExactMatrix> coordinates_in_basis(const ExactMatrix& basis, const ExactMatrix& vectors) {
    return solve(basis, vectors);
}

} // namespace grl
