#include "grl/fds_morphism.hpp"

#include <algorithm>
#include <set>

namespace grl {

namespace {

std::size_t resolve_or_throw(const ConcreteFds& s, const Rat& x, const char* what) {
    auto idx = s.resolve_index(x);
    if (!idx)
        throw GridMismatch(std::string(what) + ": index " + format_rational(x) +
                           " not resolvable on the window");
    return *idx;
}

void check_morphism_shapes(const ConcreteFds& v, const ConcreteFds& w, const FdsMorphism& phi,
                           std::vector<std::size_t>& targets) {
    if (phi.shift < 1) throw BadInput("morphism shift constant must be >= 1");
    if (phi.maps.size() != v.size())
        throw DimensionMismatch("morphism needs one map per source grid point");
    targets.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t t = resolve_or_throw(w, phi.shift * v.grid()[i], "morphism target");
        targets.push_back(t);
        if (phi.maps[i].field() != v.field())
            throw FieldMismatch("morphism map over the wrong field");
        if (phi.maps[i].rows() != w.dims()[t] || phi.maps[i].cols() != v.dims()[i])
            throw DimensionMismatch("morphism map " + std::to_string(i) + " has wrong shape");
    }
}

} // namespace

FdsMorphism identity_morphism(const ConcreteFds& v) {
    FdsMorphism phi;
    phi.shift = Rat(1);
    for (std::size_t i = 0; i < v.size(); ++i)
        phi.maps.push_back(ExactMatrix::identity(v.field(), v.dims()[i]));
    return phi;
}

FdsMorphism shift_morphism(const ConcreteFds& v, const Rat& c) {
    FdsMorphism phi;
    phi.shift = c;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t t = resolve_or_throw(v, c * v.grid()[i], "shift target");
        phi.maps.push_back(v.transition_matrix(i, t));
    }
    return phi;
}

bool verify_morphism(const ConcreteFds& v, const ConcreteFds& w, const FdsMorphism& phi) {
    if (v.field() != w.field()) throw FieldMismatch("morphism endpoints over different fields");
    std::vector<std::size_t> targets;
    check_morphism_shapes(v, w, phi, targets);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        ExactMatrix lhs = phi.maps[i + 1] * v.steps()[i];
        ExactMatrix rhs = w.transition_matrix(targets[i], targets[i + 1]) * phi.maps[i];
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

// One direction of the isomorphism law: phi' . phi against the shift
// endomorphism of v, checked wherever the full-shift target resolves.
bool composite_is_shift(const ConcreteFds& v, const ConcreteFds& w, const FdsMorphism& phi,
                        const FdsMorphism& phi_prime) {
    Rat full = phi.shift * phi_prime.shift;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t mid = *w.resolve_index(phi.shift * v.grid()[i]);
        std::size_t t1 = *v.resolve_index(phi_prime.shift * w.grid()[mid]);
        auto t2 = v.resolve_index(full * v.grid()[i]);
        if (!t2) continue;  // window edge; not checkable
        ExactMatrix lhs = v.transition_matrix(t1, *t2) * (phi_prime.maps[mid] * phi.maps[i]);
        ExactMatrix rhs = v.transition_matrix(i, *t2);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace

bool verify_isomorphism(const ConcreteFds& v, const ConcreteFds& w, const FdsMorphism& phi,
                        const FdsMorphism& phi_prime) {
    if (!verify_morphism(v, w, phi)) return false;
    if (!verify_morphism(w, v, phi_prime)) return false;
    return composite_is_shift(v, w, phi, phi_prime) &&
           composite_is_shift(w, v, phi_prime, phi);
}

namespace {

void require_shared_grid(const ConcreteFds& a, const ConcreteFds& b, const char* what) {
    if (a.grid() != b.grid())
        throw GridMismatch(std::string(what) + ": systems must share a grid");
    if (a.field() != b.field())
        throw FieldMismatch(std::string(what) + ": systems must share a field");
}

// im(first) == ker(second), via second*first = 0 and the rank identity.
void require_exact_at(const ExactMatrix& first, const ExactMatrix& second, std::size_t middle_dim,
                      const std::string& where) {
    if (!(second * first).is_zero())
        throw NotExact(where + ": composite of consecutive maps is nonzero");
    if (rank(first) + rank(second) != middle_dim)
        throw NotExact(where + ": rank defect (im != ker)");
}

void require_commutes(const ExactMatrix& map_next, const ExactMatrix& step_src,
                      const ExactMatrix& step_dst, const ExactMatrix& map_here,
                      const std::string& where) {
    if (map_next * step_src != step_dst * map_here)
        throw NotExact(where + ": square does not commute");
}

} // namespace

std::pair<FdsMorphism, FdsMorphism> les_collapse_isomorphism(const ConcreteFds& v,
                                                             const ConcreteFds& w,
                                                             const ConcreteFds& u,
                                                             const LesMaps& les, const Rat& c) {
    require_shared_grid(v, w, "les_collapse");
    require_shared_grid(v, u, "les_collapse");
    if (c < 1) throw BadInput("collapse constant must be >= 1");
    const std::size_t m = v.size();
    if (les.a12.size() != m || les.a23.size() != m || les.a31.size() != m)
        throw DimensionMismatch("les maps must cover every grid point");

    for (std::size_t i = 0; i < m; ++i) {
        const auto& a12 = les.a12[i];
        const auto& a23 = les.a23[i];
        const auto& a31 = les.a31[i];
        if (a12.rows() != w.dims()[i] || a12.cols() != v.dims()[i] ||
            a23.rows() != u.dims()[i] || a23.cols() != w.dims()[i] ||
            a31.rows() != v.dims()[i] || a31.cols() != u.dims()[i])
            throw DimensionMismatch("les maps at grid point " + std::to_string(i) +
                                    " have wrong shapes");
        std::string at = "grid point " + std::to_string(i);
        require_exact_at(a31, a12, v.dims()[i], at + " (exactness at V)");
        require_exact_at(a12, a23, w.dims()[i], at + " (exactness at W)");
        require_exact_at(a23, a31, u.dims()[i], at + " (exactness at U)");
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::string at = "step " + std::to_string(i);
        require_commutes(les.a12[i + 1], v.steps()[i], w.steps()[i], les.a12[i], at + " (a12)");
        require_commutes(les.a23[i + 1], w.steps()[i], u.steps()[i], les.a23[i], at + " (a23)");
        require_commutes(les.a31[i + 1], u.steps()[i], v.steps()[i], les.a31[i], at + " (a31)");
    }
    // The collapse hypothesis: every resolvable C-shift composite of u is
    // the zero map. A stabilized u with a nonzero tail fails here
    // immediately (its tail shift is the identity).
    for (std::size_t i = 0; i < m; ++i) {
        auto t = u.resolve_index(c * u.grid()[i]);
        if (!t) continue;
        if (!u.transition_matrix(i, *t).is_zero())
            throw UTailNotTrivial("u's C-shift at grid point " + std::to_string(i) +
                                  " is nonzero");
    }

    FdsMorphism phi;
    phi.shift = Rat(1);
    phi.maps = les.a12;

    FdsMorphism phi_prime;
    phi_prime.shift = c * c;
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t mid = resolve_or_throw(w, c * w.grid()[j], "les_collapse mid target");
        std::size_t fin = resolve_or_throw(v, c * c * w.grid()[j], "les_collapse final target");
        ExactMatrix rhs = w.transition_matrix(j, mid);
        auto solved = solve(les.a12[mid], rhs);
        if (!solved)
            throw NoSolution("a12 does not reach psi'(q) at grid point " + std::to_string(j) +
                             "; exactness hypotheses were insufficient on this window");
        phi_prime.maps.push_back(v.transition_matrix(mid, fin) * *solved);
    }
    return {std::move(phi), std::move(phi_prime)};
}

bool bigger_than_check(const ConcreteFds& v, const ConcreteFds& w, const Rat& a, const Rat& b,
                       const Rat& c) {
    if (v.field() != w.field()) throw FieldMismatch("bigger-than inputs over different fields");
    if (a < 1 || b < 1 || c < 1 || c < b)
        throw BadInput("bigger-than constants need A,B,C >= 1 and C >= B");

    std::set<Rat> xs;
    for (const Rat& g : w.grid()) xs.insert(g);
    for (const Rat& h : v.grid())
        if (h / b >= 1) xs.insert(h / b);

    bool any_checked = false;
    for (const Rat& x : xs) {
        std::set<Rat> ys{Rat(1)};
        for (const Rat& h : v.grid()) {
            Rat y = h / (c * x);
            if (y >= 1) ys.insert(y);
        }
        for (const Rat& h : w.grid()) {
            Rat y = h / (a * x);
            if (y >= 1) ys.insert(y);
        }
        for (const Rat& y : ys) {
            auto vb = v.resolve_index(b * x);
            auto vc = v.resolve_index(c * y * x);
            auto wx = w.resolve_index(x);
            auto wa = w.resolve_index(a * y * x);
            if (!vb || !vc || !wx || !wa) continue;
            any_checked = true;
            if (transition_rank(v, *vb, *vc) < transition_rank(w, *wx, *wa)) return false;
        }
    }
    if (!any_checked)
        throw GridMismatch("no sampled (x, y) pair was resolvable on both windows");
    return true;
}

ConcreteFds bigger_than_rank_model(const ConcreteFds& v, const ConcreteFds& w, const Rat& a,
                                   const Rat& b, const Rat& c) {
    if (!bigger_than_check(v, w, a, b, c))
        throw PreconditionFailed("bigger_than_check does not hold on this window");

    const std::size_t m = w.size();
    std::vector<Rat> grid;
    std::vector<std::size_t> targets;
    std::vector<ExactMatrix> bases;
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < m; ++k) {
        grid.push_back(b * w.grid()[k]);
        std::size_t t = resolve_or_throw(w, a * w.grid()[k], "rank model target");
        targets.push_back(t);
        ExactMatrix basis = image_basis(w.transition_matrix(k, t));
        dims.push_back(basis.cols());
        bases.push_back(std::move(basis));
    }
    std::vector<ExactMatrix> steps;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        // psi' maps im(psi'_{k,t_k}) into im(psi'_{k+1,t_{k+1}}); express it
        // in the chosen bases.
        ExactMatrix pushed = w.transition_matrix(targets[k], targets[k + 1]) * bases[k];
        auto coords = coordinates_in_basis(bases[k + 1], pushed);
        if (!coords)
            throw NoSolution("induced image map failed to factor; invariant violated");
        steps.push_back(*coords);
    }
    for (std::size_t k = 0; k < m; ++k) {
        auto vi = v.resolve_index(grid[k]);
        if (vi && dims[k] > v.dims()[*vi])
            throw PreconditionFailed("model dimension exceeds |V_x| at grid point " +
                                     std::to_string(k));
    }
    return ConcreteFds(w.field(), std::move(grid), std::move(dims), std::move(steps),
                       w.stabilized());
}

} // namespace grl
