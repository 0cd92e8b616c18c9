#include "grl/integer_matrix.hpp"

#include <algorithm>

#include "grl/errors.hpp"

namespace grl {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows x cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("integer matrix product shape mismatch");
    IntegerMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // divides exactly (Bareiss)
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct SmithState {
    IntegerMatrix d, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row[a] += c * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) += c * d.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += c * u.at(b, j);
    }
    // col[a] += c * col[b]
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) += c * d.at(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += c * v.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }
};

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithState s{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
    const std::size_t nmin = std::min(rows, cols);

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // Minimal nonzero |entry| in the trailing block becomes the pivot.
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (s.d.at(i, j) == 0) continue;
                    Int a = int_abs(s.d.at(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) break;  // trailing block all zero; done with this t and the rest
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.d.at(i, t) == 0) continue;
                Int q = s.d.at(i, t) / s.d.at(t, t);
                s.add_row(i, t, -q);
                if (s.d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.d.at(t, j) == 0) continue;
                Int q = s.d.at(t, j) / s.d.at(t, t);
                s.add_col(j, t, -q);
                if (s.d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders left; pick a new pivot

            // Pivot divides the rest of the block, or we fold a bad row in
            // and reduce again.
            std::size_t bi = 0, bj = 0;
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                        divides_all = false;
                        bi = i;
                        bj = j;
                    }
            if (divides_all) break;
            (void)bj;
            s.add_row(t, bi, Int(1));
        }
        if (s.d.at(t, t) < 0) s.negate_row(t);
    }
    return SmithDecomposition{std::move(s.u), std::move(s.d), std::move(s.v)};
}

std::vector<Int> invariant_factors(const IntegerMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Int> factors;
    const std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < nmin; ++i)
        if (snf.d.at(i, i) != 0) factors.push_back(snf.d.at(i, i));
    return factors;
}

std::size_t integer_rank(const IntegerMatrix& m) {
    return invariant_factors(m).size();
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::size_t r = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (snf.d.at(i, i) != 0) ++r;
    // Columns r.. of V span ker(m): with U m V = D, m (V e_j) = U^{-1} D e_j = 0
    // exactly when column j of D vanishes.
    IntegerMatrix basis(m.cols(), m.cols() - r);
    for (std::size_t j = r; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            basis.at(i, j - r) = snf.v.at(i, j);
    return basis;
}

} // namespace grl
