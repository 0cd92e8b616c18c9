#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grl/exact_matrix.hpp"
#include "grl/growth.hpp"

namespace grl {

// Finite window of a filtered directed system: vector spaces on a strictly
// increasing rational grid starting at x >= 1, with one step matrix per
// consecutive pair. The system is piecewise constant between breakpoints;
// `stabilized` asserts it is constant with identity maps past the last grid
// point, which is what makes colimit ranks computable.
class ConcreteFds {
public:
    ConcreteFds(Field field, std::vector<Rat> grid, std::vector<std::size_t> dims,
                std::vector<ExactMatrix> steps, bool stabilized);

    static ConcreteFds constant(Field field, std::vector<Rat> grid, std::size_t dim,
                                bool stabilized = true);

    const Field& field() const { return field_; }
    const std::vector<Rat>& grid() const { return grid_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<ExactMatrix>& steps() const { return steps_; }
    bool stabilized() const { return stabilized_; }
    std::size_t size() const { return grid_.size(); }

    // Largest grid index i with grid[i] <= x. Empty when x precedes the
    // window, or trails it on an unstabilized system.
    std::optional<std::size_t> resolve_index(const Rat& x) const;

    // Composite step matrix from grid point i to grid point j (identity for
    // i == j).
    ExactMatrix transition_matrix(std::size_t i, std::size_t j) const;

private:
    Field field_;
    std::vector<Rat> grid_;
    std::vector<std::size_t> dims_;
    std::vector<ExactMatrix> steps_;
    bool stabilized_;
};

// rank of psi_{x_i, x_j}; i == j gives dims[i].
std::size_t transition_rank(const ConcreteFds& v, std::size_t i, std::size_t j);

// a(x_i): rank of the map into the colimit, which under stabilization is
// the transition rank to the last grid point.
std::size_t colimit_rank(const ConcreteFds& v, std::size_t i);

std::vector<std::size_t> colimit_rank_table(const ConcreteFds& v);

// Least-squares slope of log a(x) against log x over grid points with
// a(x) > 0; never a certificate, only a window diagnostic.
struct GrowthEstimate {
    bool all_zero = false;   // a vanished identically; the estimate is -inf
    double log_log_slope = 0.0;

    std::string str() const;
};

GrowthEstimate estimate_growth_rate(const ConcreteFds& v);

// Lossless re-indexing onto a finer grid; inserted points copy the space to
// their left and compose step maps.
ConcreteFds resample(const ConcreteFds& v, const std::vector<Rat>& grid);

// Union grid of both inputs, each resampled; throws GridMismatch when one
// window cannot cover the other.
std::pair<ConcreteFds, ConcreteFds> align(const ConcreteFds& v, const ConcreteFds& w);

// Pointwise tensor product: dims multiply, steps are Kronecker products.
ConcreteFds tensor(const ConcreteFds& v, const ConcreteFds& w);

// Pointwise direct sum: dims add, steps block-diagonal.
ConcreteFds direct_sum(const ConcreteFds& v, const ConcreteFds& w);

} // namespace grl
