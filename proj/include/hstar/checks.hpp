#pragma once

#include <optional>
#include <vector>

#include "hstar/constructions.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/report.hpp"

namespace hstar {

// Scott's bound for lattice polygons: passes when h*_2 = 0, or
// h*_2 <= h*_1 <= 3 h*_2 + 3, or (h*_1, h*_2) = (7, 1).
CheckReport scott_dim2(const Int& h1, const Int& h2);

// The same bound without the lower inequality; this is the form that holds
// in every dimension once h*_3 = 0.
CheckReport scott_universal(const Int& h1, const Int& h2);

// Applies scott_universal to p when h*_3(p) = 0; reports branch
// "hypothesis-unmet" (and passes) otherwise.
CheckReport main_theorem(const LatticePolytope& p);

// Tail-vs-head partial sums: h*_{d-1} + ... + h*_{d-i} <= h*_2 + ... + h*_{i+1}
// for 1 <= i <= d-2 (vacuous below dimension 3).
CheckReport hibi_lower(const HStarVector& h);

// Head-vs-tail partial sums against the degree s:
// h*_0 + ... + h*_i <= h*_s + ... + h*_{s-i} for 0 <= i <= s.
CheckReport stanley(const HStarVector& h);

// When the interior is nonempty (h*_d > 0): h*_1 <= h*_i for 1 <= i <= d-1.
CheckReport hibi_interior(const HStarVector& h);

// For h*-vectors of spanning polytopes: no internal zeros up to the degree.
CheckReport spanning_gapless(const HStarVector& h);

// x -> x * linear + shift, unimodular on lattice points
struct AffineMap {
    IntMatrix linear;
    IntVec shift;
    IntVec apply(const IntVec& x) const;
    RatVec apply(const RatVec& x) const;
};

// transports an affine lattice through the map
AffineLattice transform_lattice(const AffineLattice& L, const AffineMap& f);

// Strips pyramid apexes (vertices at lattice height one over the hyperplane
// spanned by the remaining vertices) until none is left; returns the final
// base together with how many layers came off.
struct StripResult {
    LatticePolytope base;
    int layers = 0;
};
StripResult strip_pyramids(const LatticePolytope& p);

// Recognizes the two shapes a polytope with h*-degree <= 1 can take: the
// repeated pyramid over the twice-dilated unimodular triangle, or a prism of
// vertical segments over a unimodular simplex.  For a prism, `heights` holds
// the segment heights (fibers in lexicographic base order) and `to_standard`
// maps the input onto lawrence_prism(heights) exactly.
struct DegreeOneClass {
    enum class Tag { ExceptionalSimplex, LawrencePrism, NotDegreeLeOne };
    Tag tag = Tag::NotDegreeLeOne;
    std::vector<Int> heights;
    std::optional<AffineMap> to_standard;
};
DegreeOneClass classify_degree_le1(const LatticePolytope& p);

// End-to-end divisibility check: when h*_3(p) = 0 and the spanning polytope
// of p is a prism of segments, verifies h*_1 = b - 1 and h*_2 = b c (so
// (h*_1 + 1) | h*_2), where b is the total segment height and c the common
// h*_2 of the unit-height slices.
CheckReport divisibility_lawrence(const LatticePolytope& p);

} // namespace hstar
