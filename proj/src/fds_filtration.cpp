#include "grl/fds_filtration.hpp"

#include <algorithm>

namespace grl {

namespace {

// rank of the map induced on homology by a chain map f : (P,dp) -> (Q,dq):
// rank [f Z_p | B_q] - rank B_q, cycles Z and boundaries B.
std::size_t homology_map_rank(const ExactMatrix& f, const ExactMatrix& dp,
                              const ExactMatrix& dq) {
    ExactMatrix cycles = kernel_basis(dp);
    ExactMatrix boundaries = image_basis(dq);
    ExactMatrix pushed = f * cycles;
    return rank(hconcat(pushed, boundaries)) - rank(boundaries);
}

std::size_t homology_rank(const ExactMatrix& d, std::size_t n) {
    return n - 2 * rank(d);
}

ExactMatrix submatrix(const ExactMatrix& m, std::size_t row_begin, std::size_t row_end,
                      std::size_t col_begin, std::size_t col_end) {
    ExactMatrix r(m.field(), row_end - row_begin, col_end - col_begin);
    for (std::size_t i = row_begin; i < row_end; ++i)
        for (std::size_t j = col_begin; j < col_end; ++j)
            r.set(i - row_begin, j - col_begin, m.at(i, j));
    return r;
}

} // namespace

std::size_t FilteredComplexFamily::cutoff_at(std::size_t point, std::size_t level) const {
    const auto& ks = cutoffs[point];
    if (ks.empty()) return 0;
    return level < ks.size() ? ks[level] : ks.back();
}

bool filtration_dominance_check(const FilteredComplexFamily& family, const Rat& m_const,
                                const Rat& n_const) {
    const std::size_t m = family.grid.size();
    if (family.dims.size() != m || family.differentials.size() != m ||
        family.cutoffs.size() != m || family.steps.size() + 1 != m)
        throw BadInput("filtered family components disagree with the grid");
    if (m_const <= 1 || n_const <= 1)
        throw BadInput("dominance constants M, N must exceed 1");

    std::size_t max_levels = 0;
    for (std::size_t p = 0; p < m; ++p) {
        const auto& d = family.differentials[p];
        if (d.rows() != family.dims[p] || d.cols() != family.dims[p])
            throw BadInput("differential shape mismatch at point " + std::to_string(p));
        if (!(d * d).is_zero())
            throw HypothesisViolated("differential", "d.d != 0 at grid point " + std::to_string(p));
        const auto& ks = family.cutoffs[p];
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] > family.dims[p])
                throw BadInput("cutoff exceeds dimension at point " + std::to_string(p));
            if (i > 0 && ks[i] < ks[i - 1])
                throw BadInput("cutoffs must be nondecreasing at point " + std::to_string(p));
        }
        max_levels = std::max(max_levels, ks.size());
        // d preserves each F_i
        for (std::size_t i = 0; i < ks.size(); ++i) {
            std::size_t k = ks[i];
            if (k < family.dims[p] && k > 0 &&
                !submatrix(d, k, family.dims[p], 0, k).is_zero())
                throw HypothesisViolated("filtration_preserved",
                                         "differential leaks below level " + std::to_string(i) +
                                             " at grid point " + std::to_string(p));
        }
    }
    for (std::size_t s = 0; s + 1 < m; ++s) {
        const auto& step = family.steps[s];
        if (step.rows() != family.dims[s + 1] || step.cols() != family.dims[s])
            throw BadInput("step shape mismatch at " + std::to_string(s));
        if (step * family.differentials[s] != family.differentials[s + 1] * step)
            throw HypothesisViolated("chain_map",
                                     "step " + std::to_string(s) + " is not a chain map");
        std::size_t levels = std::max(family.cutoffs[s].size(), family.cutoffs[s + 1].size());
        for (std::size_t i = 0; i < levels; ++i) {
            std::size_t k1 = family.cutoff_at(s, i);
            std::size_t k2 = family.cutoff_at(s + 1, i);
            if (k1 > 0 && k2 < family.dims[s + 1] &&
                !submatrix(step, k2, family.dims[s + 1], 0, k1).is_zero())
                throw HypothesisViolated("filtration_preserved",
                                         "step " + std::to_string(s) + " leaks below level " +
                                             std::to_string(i));
        }
    }

    // Stabilization: F_i = C_lambda for every provided level at or beyond
    // floor(N * lambda), and the filtration exhausts C_lambda.
    for (std::size_t p = 0; p < m; ++p) {
        Int lvl = rat_floor(n_const * family.grid[p]);
        std::size_t stab_level = lvl < 0 ? 0 : static_cast<std::size_t>(lvl);
        if (family.cutoff_at(p, stab_level) != family.dims[p])
            throw HypothesisViolated("stabilization",
                                     "filtration not full at level floor(N*lambda) for grid point " +
                                         std::to_string(p));
        for (std::size_t i = stab_level; i < family.cutoffs[p].size(); ++i)
            if (family.cutoffs[p][i] != family.dims[p])
                throw HypothesisViolated("stabilization", "filtration moves past its cap at point " +
                                                              std::to_string(p));
    }

    // Graded pieces of the original family, per level.
    auto graded_block = [&](std::size_t p, std::size_t level, const ExactMatrix& mat,
                            std::size_t src_p) {
        std::size_t lo_r = level == 0 ? 0 : family.cutoff_at(p, level - 1);
        std::size_t hi_r = family.cutoff_at(p, level);
        std::size_t lo_c = level == 0 ? 0 : family.cutoff_at(src_p, level - 1);
        std::size_t hi_c = family.cutoff_at(src_p, level);
        return submatrix(mat, lo_r, hi_r, lo_c, hi_c);
    };

    // Graded homology maps must be isomorphisms for y > x >= M*i. Real
    // indices just above M*i resolve to the grid point at or below it, so
    // consecutive checks start at resolve(M*i).
    for (std::size_t level = 0; level < max_levels; ++level) {
        Rat threshold = m_const * Rat(level);
        std::size_t start = 0;
        if (threshold >= family.grid.front()) {
            auto it = std::upper_bound(family.grid.begin(), family.grid.end(), threshold);
            start = static_cast<std::size_t>(it - family.grid.begin()) - 1;
        }
        for (std::size_t s = start; s + 1 < m; ++s) {
            ExactMatrix f = graded_block(s + 1, level, family.steps[s], s);
            ExactMatrix dp = graded_block(s, level, family.differentials[s], s);
            ExactMatrix dq = graded_block(s + 1, level, family.differentials[s + 1], s + 1);
            std::size_t h_src = homology_rank(dp, dp.rows());
            std::size_t h_dst = homology_rank(dq, dq.rows());
            if (h_src != h_dst || homology_map_rank(f, dp, dq) != h_src)
                throw HypothesisViolated(
                    "graded_iso", "graded homology map at level " + std::to_string(level) +
                                      ", step " + std::to_string(s) + " is not an isomorphism");
        }
    }

    // Conclusion: the proof's prefix subsystem C'_lambda = F_{floor(lambda/M)}.
    std::vector<std::size_t> prefix(m);
    std::vector<std::size_t> level_of(m);
    for (std::size_t p = 0; p < m; ++p) {
        Int lvl = rat_floor(family.grid[p] / m_const);
        level_of[p] = lvl < 0 ? 0 : static_cast<std::size_t>(lvl);
        prefix[p] = family.cutoff_at(p, level_of[p]);
    }
    for (std::size_t j = 0; j < m; ++j) {
        ExactMatrix dj = submatrix(family.differentials[j], 0, prefix[j], 0, prefix[j]);
        for (std::size_t k = j; k < m; ++k) {
            ExactMatrix acc = ExactMatrix::identity(family.field, family.dims[j]);
            for (std::size_t s = j; s < k; ++s) acc = family.steps[s] * acc;

            ExactMatrix dk = submatrix(family.differentials[k], 0, prefix[k], 0, prefix[k]);
            ExactMatrix f = submatrix(acc, 0, prefix[k], 0, prefix[j]);
            std::size_t total_rank = homology_map_rank(f, dj, dk);

            std::size_t graded_rank = 0;
            std::size_t lvls = std::max(level_of[j], level_of[k]) + 1;
            for (std::size_t level = 0; level < lvls; ++level) {
                std::size_t lo_r = level == 0 ? 0 : std::min(family.cutoff_at(k, level - 1), prefix[k]);
                std::size_t hi_r = std::min(family.cutoff_at(k, level), prefix[k]);
                std::size_t lo_c = level == 0 ? 0 : std::min(family.cutoff_at(j, level - 1), prefix[j]);
                std::size_t hi_c = std::min(family.cutoff_at(j, level), prefix[j]);
                ExactMatrix fg = submatrix(acc, lo_r, hi_r, lo_c, hi_c);
                ExactMatrix dgj = submatrix(family.differentials[j], lo_c, hi_c, lo_c, hi_c);
                ExactMatrix dgk = submatrix(family.differentials[k], lo_r, hi_r, lo_r, hi_r);
                graded_rank += homology_map_rank(fg, dgj, dgk);
            }
            if (graded_rank < total_rank) return false;
        }
    }
    return true;
}

bool split_homology_bound_check(const SplitComplexFamily& family, const Rat& c) {
    const std::size_t m = family.grid.size();
    if (family.a_dims.size() != m || family.b_dims.size() != m ||
        family.differentials.size() != m || family.steps.size() + 1 != m)
        throw BadInput("split family components disagree with the grid");
    if (c < 1) throw BadInput("shift constant must be >= 1");

    auto b_block = [&](const ExactMatrix& mat, std::size_t dst, std::size_t src) {
        return submatrix(mat, family.a_dims[dst], family.dim(dst), family.a_dims[src],
                         family.dim(src));
    };

    for (std::size_t p = 0; p < m; ++p) {
        const auto& d = family.differentials[p];
        if (d.rows() != family.dim(p) || d.cols() != family.dim(p))
            throw BadInput("differential shape mismatch at point " + std::to_string(p));
        if (!(d * d).is_zero())
            throw BlockStructureViolated("d_q . d_q != 0 at grid point " + std::to_string(p));
        ExactMatrix db = b_block(d, p, p);
        if (!(db * db).is_zero())
            throw BlockStructureViolated("d_b . d_b != 0 at grid point " + std::to_string(p));
    }
    for (std::size_t s = 0; s + 1 < m; ++s) {
        const auto& step = family.steps[s];
        if (step.rows() != family.dim(s + 1) || step.cols() != family.dim(s))
            throw BadInput("step shape mismatch at " + std::to_string(s));
        if (step * family.differentials[s] != family.differentials[s + 1] * step)
            throw BlockStructureViolated("step " + std::to_string(s) +
                                         " does not commute with the differential");
        ExactMatrix bs = b_block(step, s + 1, s);
        ExactMatrix dbs = b_block(family.differentials[s], s, s);
        ExactMatrix dbd = b_block(family.differentials[s + 1], s + 1, s + 1);
        if (bs * dbs != dbd * bs)
            throw BlockStructureViolated("B-block of step " + std::to_string(s) +
                                         " does not commute with d_b");
    }
    // B with the b-blocks must itself be functorial: the b-block of every
    // composite equals the composite of b-blocks.
    auto composite = [&](std::size_t j, std::size_t k) {
        ExactMatrix acc = ExactMatrix::identity(family.field, family.dim(j));
        for (std::size_t s = j; s < k; ++s) acc = family.steps[s] * acc;
        return acc;
    };
    auto b_composite = [&](std::size_t j, std::size_t k) {
        ExactMatrix acc = ExactMatrix::identity(family.field, family.b_dims[j]);
        for (std::size_t s = j; s < k; ++s) acc = b_block(family.steps[s], s + 1, s) * acc;
        return acc;
    };
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k)
            if (b_block(composite(j, k), k, j) != b_composite(j, k))
                throw BlockStructureViolated("B-blocks do not compose functorially on " +
                                             std::to_string(j) + " -> " + std::to_string(k));

    auto resolve = [&](const Rat& x) -> std::optional<std::size_t> {
        if (x < family.grid.front()) return std::nullopt;
        if (x > family.grid.back() && !family.stabilized) return std::nullopt;
        auto it = std::upper_bound(family.grid.begin(), family.grid.end(), x);
        return static_cast<std::size_t>(it - family.grid.begin()) - 1;
    };

    for (std::size_t j = 0; j < m; ++j) {
        auto t = resolve(c * family.grid[j]);
        if (!t) continue;
        ExactMatrix q_comp = composite(j, *t);
        ExactMatrix b_comp = b_composite(j, *t);

        auto restricted_rank_h = [&](const ExactMatrix& comp, const ExactMatrix& ambient_d)
            -> std::size_t {
            ExactMatrix basis = image_basis(comp);
            auto coords = coordinates_in_basis(basis, ambient_d * basis);
            if (!coords)
                throw BlockStructureViolated("differential does not preserve the image subsystem");
            return homology_rank(*coords, basis.cols());
        };
        std::size_t h_b = restricted_rank_h(b_comp, b_block(family.differentials[*t], *t, *t));
        std::size_t h_q = restricted_rank_h(q_comp, family.differentials[*t]);
        if (h_b > h_q + 6 * family.a_dims[j]) return false;
    }
    return true;
}

} // namespace grl
