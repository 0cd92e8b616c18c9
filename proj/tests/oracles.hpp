#pragma once

// Test-only oracles, deliberately independent of the library's elimination
// code paths. Ranks come from brute-force minor enumeration and invariant
// factors from the determinantal gcd characterization.

#include <algorithm>
#include <random>
#include <vector>

#include "grl/exact_matrix.hpp"
#include "grl/integer_matrix.hpp"

namespace oracle {

inline grl::Int minor_det(const grl::IntegerMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
    // Laplace expansion along the first selected row.
    if (rows.empty()) return 1;
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    grl::Int det = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m.at(rows[0], cols[k]) == 0) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        grl::Int term = m.at(rows[0], cols[k]) * minor_det(m, sub_rows, sub_cols);
        det += (k % 2 == 0) ? term : grl::Int(-term);
    }
    return det;
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// gcd of all k x k minors; 0 if all vanish.
inline grl::Int minor_gcd(const grl::IntegerMatrix& m, std::size_t k) {
    grl::Int g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            grl::Int d = minor_det(m, rows, cols);
            if (d < 0) d = -d;
            g = boost::multiprecision::gcd(g, d);
        });
    });
    return g;
}

inline std::size_t rank_by_minors(const grl::IntegerMatrix& m) {
    std::size_t r = std::min(m.rows(), m.cols());
    while (r > 0 && minor_gcd(m, r) == 0) --r;
    return r;
}

// d_k = g_k / g_{k-1} while minors survive.
inline std::vector<grl::Int> invariant_factors_by_minors(const grl::IntegerMatrix& m) {
    std::vector<grl::Int> out;
    grl::Int prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        grl::Int g = minor_gcd(m, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline grl::IntegerMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows,
                                                std::size_t cols, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    grl::IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

inline grl::ExactMatrix random_exact_matrix(std::mt19937_64& rng, const grl::Field& f,
                                            std::size_t rows, std::size_t cols) {
    grl::ExactMatrix m(f, rows, cols);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, grl::Rat(dist(rng)));
    return m;
}

} // namespace oracle
