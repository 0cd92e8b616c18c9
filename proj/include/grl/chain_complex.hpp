#pragma once

#include <cstddef>
#include <vector>

#include "grl/integer_matrix.hpp"

namespace grl {

// Bounded complex of free Z-modules. boundary(i) is d_i : C_i -> C_{i-1};
// d_0 maps into the zero module. d . d = 0 is checked at construction.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<std::size_t> group_ranks, std::vector<IntegerMatrix> boundaries);

    static ChainComplex point();

    std::size_t top_degree() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    std::size_t rank_at(std::size_t degree) const {
        return degree < ranks_.size() ? ranks_[degree] : 0;
    }
    const std::vector<std::size_t>& group_ranks() const { return ranks_; }

    // d_i; identity-shaped zero map beyond the stored range.
    const IntegerMatrix& boundary(std::size_t degree) const { return boundaries_[degree]; }
    const std::vector<IntegerMatrix>& boundaries() const { return boundaries_; }

    bool operator==(const ChainComplex& other) const {
        return ranks_ == other.ranks_ && boundaries_ == other.boundaries_;
    }

private:
    std::vector<std::size_t> ranks_;          // ranks_[i] = rank of C_i
    std::vector<IntegerMatrix> boundaries_;   // boundaries_[i] = d_i, rank_{i-1} x rank_i
};

struct HomologySummary {
    struct Degree {
        std::size_t betti = 0;
        std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
    };
    std::vector<Degree> degrees;

    const Degree& at(std::size_t i) const;
    bool is_acyclic() const;          // H_0 = Z and reduced homology zero
    bool operator==(const HomologySummary& other) const;
};

// Integral homology via Smith normal form: betti_i = rank C_i - rank d_i -
// rank d_{i+1}; torsion in degree i comes from the invariant factors of
// d_{i+1}.
HomologySummary homology(const ChainComplex& c);

} // namespace grl
