#pragma once

#include <optional>
#include <vector>

#include "hstar/error.hpp"
#include "hstar/matrix.hpp"

namespace hstar {

// Row-style Hermite normal form: u * m = h with |det u| = 1.
// Pivots are positive, entries above a pivot are reduced into [0, pivot),
// and zero rows sit at the bottom.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);

// Smith normal form: u * m * v = d with u, v unimodular, d diagonal,
// nonnegative, each diagonal entry dividing the next.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};
SnfResult snf(const IntMatrix& m);

// An affine sublattice of Q^n: base + { z * basis : z integral }.
// The basis is stored as an HNF integer matrix over a common denominator
// and gcd-reduced, so equal lattices have equal representations.
class AffineLattice {
public:
    AffineLattice(RatVec base, const std::vector<RatVec>& generators);
    static AffineLattice standard(int dim);

    int ambient_dim() const { return static_cast<int>(base_.size()); }
    int rank() const { return num_.rows(); }
    const RatVec& base_point() const { return base_; }
    const IntMatrix& basis_numerators() const { return num_; }
    const Int& denominator() const { return den_; }
    RatVec basis_row(int i) const;

    bool contains(const RatVec& p) const { return coords(p).has_value(); }
    // coordinates z with p = base + z * basis, if p lies in the lattice
    std::optional<IntVec> coords(const RatVec& p) const;
    // coordinates of a direction vector in the linear part
    std::optional<IntVec> linear_coords(const RatVec& dir) const;
    RatVec point_at(const IntVec& z) const;

    bool operator==(const AffineLattice& o) const;

private:
    RatVec base_;
    IntMatrix num_; // rank x dim, HNF
    Int den_ = 1;
};

// Affine lattice generated by integral affine combinations of the given
// points; the first point is the base.
AffineLattice affine_span(const std::vector<RatVec>& points);

// Index [super : sub] of two full-rank affine lattices in the same
// ambient space. Throws NotSublattice if sub is not contained in super.
Int lattice_index(const AffineLattice& sub, const AffineLattice& super);

// Coordinates of points relative to a lattice basis.
// Throws PointNotInLattice if a point is not in the lattice.
std::vector<IntVec> rebase(const std::vector<RatVec>& points, const AffineLattice& lattice);

} // namespace hstar
