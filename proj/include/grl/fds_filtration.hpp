#pragma once

#include <vector>

#include "grl/fds.hpp"

namespace grl {

// Family of field-coefficient complexes indexed by the grid, with a nested
// exhaustive filtration per point. Filtration steps are dimension cutoffs in
// the ambient basis: F_i = span(e_0 .. e_{cutoff[i]-1}); levels beyond the
// provided list repeat the last value.
struct FilteredComplexFamily {
    Field field;
    std::vector<Rat> grid;
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> differentials;          // per point, dims x dims, d.d = 0
    std::vector<std::vector<std::size_t>> cutoffs;   // per point, nondecreasing
    std::vector<ExactMatrix> steps;                  // per consecutive pair, chain maps
    bool stabilized = true;

    std::size_t cutoff_at(std::size_t point, std::size_t level) const;
};

// Verifies the dominance hypotheses (differentials and step maps preserve
// the filtration, graded homology maps are isomorphisms for y > x >= M*i,
// the filtration stabilizes by level floor(N*lambda)), throwing
// HypothesisViolated with the failing hypothesis name. On success, builds
// the proof's prefix subsystem C'_lambda = F_{floor(lambda/M)} and returns
// whether the graded system rank-dominates total homology on every grid
// pair.
bool filtration_dominance_check(const FilteredComplexFamily& family, const Rat& m_const,
                                const Rat& n_const);

// Family of complexes Q = A (+) B with the A-coordinates first. Steps and
// differentials are full (a+b) x (a+b) matrices; the B-block of each must
// itself behave as a filtered directed system of complexes.
struct SplitComplexFamily {
    Field field;
    std::vector<Rat> grid;
    std::vector<std::size_t> a_dims, b_dims;
    std::vector<ExactMatrix> differentials;  // per point
    std::vector<ExactMatrix> steps;          // per consecutive pair
    bool stabilized = true;

    std::size_t dim(std::size_t point) const { return a_dims[point] + b_dims[point]; }
};

// The homology upper bound behind the open-book estimate: at every grid
// point lambda with C*lambda resolvable,
//   rank H(im b_{lambda,C lambda}) <= rank H(im q_{lambda,C lambda}) + 6 dim A_lambda.
// Structural preconditions (block differential squares to zero, chain maps,
// B-block functoriality) raise BlockStructureViolated.
bool split_homology_bound_check(const SplitComplexFamily& family, const Rat& c);

} // namespace grl
