#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hstar/polytope.hpp"
#include "hstar/report.hpp"

namespace hstar {

// The h*-vector of a d-dimensional lattice polytope: d+1 integers
// (h*_0, ..., h*_d) with h*_0 = 1 and every entry nonnegative.  The sum of
// the entries equals the normalized volume d! vol(P).
class HStarVector {
public:
    explicit HStarVector(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }

    // dimension of the polytope this vector belongs to
    int poly_dim() const { return static_cast<int>(coeffs_.size()) - 1; }

    // largest index with a nonzero entry (0 for the unimodular simplex)
    int degree() const;

    // normalized volume: sum of all entries
    Int volume() const;

    // entry at index i, treating indices past the end as zero
    Int at_or_zero(std::size_t i) const;

    // equal as polynomials, i.e. equal after stripping trailing zeros
    bool same_polynomial(const HStarVector& other) const;

    // e.g. "1 + 7 t + 1 t^2"
    std::string to_string() const;

    bool operator==(const HStarVector&) const = default;

private:
    std::vector<Int> coeffs_;
};

// h* via the Ehrhart recurrence: count lattice points of the dilations
// 0..d and alternately difference them against binomial(d+1, i).
HStarVector hstar_interp(const LatticePolytope& p);

// The finite abelian group attached to a d-simplex: residues of the lattice
// modulo the sublattice spanned by the rows (v_i, 1).  Each element is the
// tuple of fractional barycentric-style coordinates, and its height (the sum
// of the tuple) is an integer in [0, d].  The histogram of heights is the
// h*-vector and the group order is the normalized volume.
struct LambdaGroup {
    int tuple_len = 0;                   // d + 1
    std::vector<RatVec> elements;        // sorted lexicographically
    std::vector<int> heights;            // parallel to elements
    std::vector<Int> invariant_factors;  // nontrivial cyclic factors, divisibility chain

    Int order() const { return Int(static_cast<long long>(elements.size())); }
    bool contains(const RatVec& r) const;
    int height_of(const RatVec& r) const;  // throws PointNotInLattice if absent

    // componentwise addition mod 1
    static RatVec add(const RatVec& a, const RatVec& b);
};

LambdaGroup lambda_group(const LatticePolytope& simplex);

// h* of a simplex read off the height histogram of its group
HStarVector hstar_group(const LatticePolytope& simplex);

// group engine for simplices, counting engine otherwise
HStarVector hstar_auto(const LatticePolytope& p);

// Cross-checks an h*-vector against the polytope it came from:
// h*_1 against the lattice point count, h*_d against the interior count,
// the top nonzero entry against the interior count of the (d+1-s)-th
// dilation, h*_d <= h*_1, and for simplices the volume against an edge
// determinant.
CheckReport identity_checks(const LatticePolytope& p, const HStarVector& h);

// small exact-coefficient polynomial helpers, index = degree
std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_sub(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_mul_one_minus_t(const std::vector<Int>& a);
bool poly_eq(const std::vector<Int>& a, const std::vector<Int>& b);

} // namespace hstar
