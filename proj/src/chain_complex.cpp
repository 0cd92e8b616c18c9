#include "grl/chain_complex.hpp"

#include "grl/errors.hpp"

namespace grl {

ChainComplex::ChainComplex(std::vector<std::size_t> group_ranks, std::vector<IntegerMatrix> boundaries)
    : ranks_(std::move(group_ranks)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() != ranks_.size())
        throw InvalidComplex("need one boundary map per degree (d_0 has zero rows)");
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        std::size_t expect_rows = i == 0 ? 0 : ranks_[i - 1];
        if (boundaries_[i].rows() != expect_rows || boundaries_[i].cols() != ranks_[i])
            throw InvalidComplex("boundary d_" + std::to_string(i) + " has shape " +
                                 std::to_string(boundaries_[i].rows()) + "x" +
                                 std::to_string(boundaries_[i].cols()) + ", expected " +
                                 std::to_string(expect_rows) + "x" + std::to_string(ranks_[i]));
    }
    for (std::size_t i = 1; i < ranks_.size(); ++i) {
        if (!(boundaries_[i - 1] * boundaries_[i]).is_zero())
            throw InvalidComplex("d_" + std::to_string(i - 1) + " . d_" + std::to_string(i) +
                                 " != 0");
    }
}

ChainComplex ChainComplex::point() {
    return ChainComplex({1}, {IntegerMatrix(0, 1)});
}

const HomologySummary::Degree& HomologySummary::at(std::size_t i) const {
    static const Degree zero{};
    return i < degrees.size() ? degrees[i] : zero;
}

bool HomologySummary::is_acyclic() const {
    if (degrees.empty()) return false;
    if (degrees[0].betti != 1 || !degrees[0].torsion.empty()) return false;
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i].betti != 0 || !degrees[i].torsion.empty()) return false;
    return true;
}

bool HomologySummary::operator==(const HomologySummary& other) const {
    std::size_t n = std::max(degrees.size(), other.degrees.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (at(i).betti != other.at(i).betti) return false;
        if (at(i).torsion != other.at(i).torsion) return false;
    }
    return true;
}

HomologySummary homology(const ChainComplex& c) {
    HomologySummary out;
    const std::size_t top = c.group_ranks().size();
    out.degrees.resize(top);
    for (std::size_t i = 0; i < top; ++i) {
        std::size_t rank_di = integer_rank(c.boundary(i));
        std::vector<Int> next_factors;
        std::size_t rank_dnext = 0;
        if (i + 1 < top) {
            next_factors = invariant_factors(c.boundary(i + 1));
            rank_dnext = next_factors.size();
        }
        out.degrees[i].betti = c.rank_at(i) - rank_di - rank_dnext;
        for (const Int& f : next_factors)
            if (f > 1) out.degrees[i].torsion.push_back(f);
    }
    return out;
}

} // namespace grl
