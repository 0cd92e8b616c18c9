#include "grl/fds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace grl {

ConcreteFds::ConcreteFds(Field field, std::vector<Rat> grid, std::vector<std::size_t> dims,
                         std::vector<ExactMatrix> steps, bool stabilized)
    : field_(field), grid_(std::move(grid)), dims_(std::move(dims)), steps_(std::move(steps)),
      stabilized_(stabilized) {
    if (grid_.empty()) throw BadInput("grid must be nonempty");
    if (grid_.front() < 1) throw BadInput("grid must start at x >= 1");
    for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
        if (!(grid_[i] < grid_[i + 1])) throw BadInput("grid must be strictly increasing");
    if (dims_.size() != grid_.size()) throw BadInput("one dimension per grid point required");
    if (steps_.size() + 1 != grid_.size())
        throw BadInput("need exactly one step matrix per consecutive grid pair");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (steps_[i].field() != field_)
            throw FieldMismatch("step " + std::to_string(i) + " is over the wrong field");
        if (steps_[i].rows() != dims_[i + 1] || steps_[i].cols() != dims_[i])
            throw DimensionMismatch("step " + std::to_string(i) + " must be dims[i+1] x dims[i]");
    }
}

ConcreteFds ConcreteFds::constant(Field field, std::vector<Rat> grid, std::size_t dim,
                                  bool stabilized) {
    std::vector<std::size_t> dims(grid.size(), dim);
    std::vector<ExactMatrix> steps(grid.empty() ? 0 : grid.size() - 1,
                                   ExactMatrix::identity(field, dim));
    return ConcreteFds(field, std::move(grid), std::move(dims), std::move(steps), stabilized);
}

std::optional<std::size_t> ConcreteFds::resolve_index(const Rat& x) const {
    if (x < grid_.front()) return std::nullopt;
    if (x > grid_.back() && !stabilized_) return std::nullopt;
    auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    return static_cast<std::size_t>(it - grid_.begin()) - 1;
}

ExactMatrix ConcreteFds::transition_matrix(std::size_t i, std::size_t j) const {
    if (i > j || j >= grid_.size())
        throw IndexOutOfRange("transition indices " + std::to_string(i) + " -> " +
                              std::to_string(j) + " out of range");
    ExactMatrix acc = ExactMatrix::identity(field_, dims_[i]);
    for (std::size_t k = i; k < j; ++k) acc = steps_[k] * acc;
    return acc;
}

std::size_t transition_rank(const ConcreteFds& v, std::size_t i, std::size_t j) {
    return rank(v.transition_matrix(i, j));
}

std::size_t colimit_rank(const ConcreteFds& v, std::size_t i) {
    if (!v.stabilized())
        throw NotStabilized("colimit ranks need a stabilized window");
    return transition_rank(v, i, v.size() - 1);
}

std::vector<std::size_t> colimit_rank_table(const ConcreteFds& v) {
    std::vector<std::size_t> table(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) table[i] = colimit_rank(v, i);
    return table;
}

std::string GrowthEstimate::str() const {
    if (all_zero) return "-inf";
    std::ostringstream os;
    os << log_log_slope;
    return os.str();
}

GrowthEstimate estimate_growth_rate(const ConcreteFds& v) {
    auto table = colimit_rank_table(v);  // throws NotStabilized when needed
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == 0) continue;
        double x = static_cast<double>(rat_num(v.grid()[i])) /
                   static_cast<double>(rat_den(v.grid()[i]));
        pts.emplace_back(std::log(x), std::log(static_cast<double>(table[i])));
    }
    if (pts.empty()) return GrowthEstimate{true, 0.0};
    if (pts.size() == 1) return GrowthEstimate{false, 0.0};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(pts.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0) return GrowthEstimate{false, 0.0};  // single distinct x
    return GrowthEstimate{false, (n * sxy - sx * sy) / denom};
}

ConcreteFds resample(const ConcreteFds& v, const std::vector<Rat>& grid) {
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> steps;
    std::vector<std::size_t> src;
    for (const Rat& x : grid) {
        auto idx = v.resolve_index(x);
        if (!idx)
            throw GridMismatch("grid point " + format_rational(x) + " not covered by the window");
        src.push_back(*idx);
        dims.push_back(v.dims()[*idx]);
    }
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        steps.push_back(v.transition_matrix(src[k], src[k + 1]));
    return ConcreteFds(v.field(), grid, std::move(dims), std::move(steps), v.stabilized());
}

std::pair<ConcreteFds, ConcreteFds> align(const ConcreteFds& v, const ConcreteFds& w) {
    if (v.field() != w.field()) throw FieldMismatch("aligned systems must share a field");
    std::vector<Rat> grid;
    std::merge(v.grid().begin(), v.grid().end(), w.grid().begin(), w.grid().end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return {resample(v, grid), resample(w, grid)};
}

ConcreteFds tensor(const ConcreteFds& v, const ConcreteFds& w) {
    auto [a, b] = align(v, w);
    std::vector<std::size_t> dims(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) dims[i] = a.dims()[i] * b.dims()[i];
    std::vector<ExactMatrix> steps;
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        steps.push_back(kronecker(a.steps()[k], b.steps()[k]));
    return ConcreteFds(a.field(), a.grid(), std::move(dims), std::move(steps),
                       a.stabilized() && b.stabilized());
}

ConcreteFds direct_sum(const ConcreteFds& v, const ConcreteFds& w) {
    auto [a, b] = align(v, w);
    std::vector<std::size_t> dims(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
    std::vector<ExactMatrix> steps;
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        steps.push_back(block_diagonal(a.steps()[k], b.steps()[k]));
    return ConcreteFds(a.field(), a.grid(), std::move(dims), std::move(steps),
                       a.stabilized() && b.stabilized());
}

} // namespace grl
