#pragma once

#include <vector>

#include "grl/fds.hpp"

namespace grl {

// Morphism of filtered directed systems: a shift constant C >= 1 and one
// map per source grid point into the target space at the resolved index of
// C*x. Shift targets between grid points resolve to the last grid point at
// or below C*x; stabilized tails extend the resolution.
struct FdsMorphism {
    Rat shift = Rat(1);
    std::vector<ExactMatrix> maps;  // maps[i] : V_{x_i} -> W_{resolve(shift * x_i)}
};

FdsMorphism identity_morphism(const ConcreteFds& v);

// Shift endomorphism x -> psi_{x, Cx} of v, as a morphism into itself.
FdsMorphism shift_morphism(const ConcreteFds& v, const Rat& c);

// True iff every consecutive commuting square holds exactly. Throws
// GridMismatch when a shift target cannot be resolved.
bool verify_morphism(const ConcreteFds& v, const ConcreteFds& w, const FdsMorphism& phi);

// True iff phi' . phi equals the shift endomorphism of v by
// phi.shift * phi'.shift at every checkable grid point, and symmetrically.
bool verify_isomorphism(const ConcreteFds& v, const ConcreteFds& w, const FdsMorphism& phi,
                        const FdsMorphism& phi_prime);

// Per-grid-point maps of a three-periodic long exact sequence
//   ... -> U_x --a31--> V_x --a12--> W_x --a23--> U_x -> ...
// commuting with the three systems' step maps.
struct LesMaps {
    std::vector<ExactMatrix> a12;  // V -> W
    std::vector<ExactMatrix> a23;  // W -> U
    std::vector<ExactMatrix> a31;  // U -> V
};

// The collapse lemma: when u's C-shift maps vanish, v and w are filtered
// isomorphic. phi is a12 with shift 1; phi' solves a12(w) = psi'(q)
// pointwise and pushes the solution forward, with shift C^2. The returned
// pair passes verify_isomorphism.
std::pair<FdsMorphism, FdsMorphism> les_collapse_isomorphism(const ConcreteFds& v,
                                                             const ConcreteFds& w,
                                                             const ConcreteFds& u,
                                                             const LesMaps& les, const Rat& c);

// Window check of the rank-domination relation: for every sampled pair
// (x, y) with all four indices resolvable,
//   rank im(psi_{Bx, Cxy}) >= rank im(psi'_{x, Axy}).
// A necessary-condition test only; the genuine relation quantifies over all
// real x, y >= 1.
bool bigger_than_check(const ConcreteFds& v, const ConcreteFds& w, const Rat& a, const Rat& b,
                       const Rat& c);

// Concrete realization of the dominated system: im(psi'_{x/B,(A/B)x}) on
// the grid B * grid(w), with induced maps. Checks dim <= dim V at each
// resolvable point.
ConcreteFds bigger_than_rank_model(const ConcreteFds& v, const ConcreteFds& w, const Rat& a,
                                   const Rat& b, const Rat& c);

} // namespace grl
