#pragma once

#include <vector>

#include "hstar/polytope.hpp"

namespace hstar {

// cone over q: apex one lattice step above the base hyperplane
LatticePolytope pyramid(const LatticePolytope& q);

// free join: p and q placed in complementary coordinate blocks one level
// apart, so dim = dim p + dim q + 1
LatticePolytope join(const LatticePolytope& p, const LatticePolytope& q);

// conv({0, a_0 e_d} u {e_i, e_i + a_i e_d : 1 <= i <= d-1}) with the
// vertical segments over a unimodular base simplex; throws Degenerate when
// every height is zero
LatticePolytope lawrence_prism(const std::vector<Int>& heights);

// the (d-2)-fold pyramid over conv{0, 2e_1, 2e_2}; h* = (1, 3, 0, ..., 0)
LatticePolytope exceptional_simplex(int d);

// A (2s-1)-simplex with h* = 1 + b t^s: the standard simplex over the
// refinement of Z^(2s-1) by the vector whose odd coordinates are b/(b+1)
// and even coordinates 1/(b+1).  Self-checks its own h* and throws
// ConstructionSelfCheckFailed on mismatch.
LatticePolytope concentrated_simplex(int s, const Int& b);

// Rewrites p over the lattice affinely generated by its own lattice points.
// The result's refinement field records the original ambient lattice in the
// new coordinates; index = [new : old].
struct SpanningResult {
    LatticePolytope polytope;
    Int index;
};
SpanningResult spanning(const LatticePolytope& p);

// The unit-height slices of the prism over the unimodular simplex with the
// given vertical heights, each rewritten over `refinement` and emitted in
// peel-off order (fiber 0 top slice first).  Every slice is a d-simplex
// whose vertex order puts the lower of its two stacked vertices in slot i
// and the upper in the last slot.
std::vector<LatticePolytope> section_simplices(const std::vector<Int>& heights,
                                               const AffineLattice& refinement);

} // namespace hstar
