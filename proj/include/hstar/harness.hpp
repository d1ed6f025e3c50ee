#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hstar/checks.hpp"

namespace hstar {

using Rng = std::mt19937_64;

// Enumerates every full-rank upper-triangular integer matrix in row Hermite
// form with positive diagonal, determinant <= max_volume, and off-diagonal
// entries reduced modulo the diagonal below them.  Each such matrix names
// exactly one simplex conv{0, rows} up to lattice symmetry of that shape.
// Sharding keeps every (shard_total)-th matrix in enumeration order.
struct EnumSpec {
    int dim = 2;
    Int max_volume = 1;
    int shard_index = 0;
    int shard_total = 1;
};
void enumerate_simplices(const EnumSpec& spec,
                         const std::function<void(const IntMatrix&)>& fn);

// simplex conv{0, rows of h}
LatticePolytope hnf_simplex(const IntMatrix& h);

struct SweepSummary {
    unsigned long long total = 0;
    unsigned long long h3_zero = 0;
    unsigned long long scott_pass = 0;
    unsigned long long inequality_failures = 0;
    std::vector<IntMatrix> violations;
    std::vector<IntMatrix> inequality_witnesses;
    void merge(const SweepSummary& o);
};

// Runs the degree-3-vanishing Scott bound over the enumerated simplices and,
// independently, a net of classical h*-inequalities over every member.
SweepSummary sweep_main_theorem(const EnumSpec& spec);

// same sweep fanned out over shards on worker threads, merged in order
SweepSummary sweep_parallel(int dim, const Int& max_volume, int jobs);

// Fractional-tuple maps between the groups of the stacked simplex slices.
// Tuples have length d+1; c has length d; 0 <= k <= d-1.
RatVec pi_map(const RatVec& r, int k, const std::vector<Int>& c);
RatVec pi_inv(const RatVec& r, int k, const std::vector<Int>& c);
RatVec psi_map(const RatVec& r, int k);
RatVec psi_inv(const RatVec& r, int k);

// One stacked-slice configuration: the simplex pair differing in where the
// vertical edge sits, over an ambient refinement of Z^d.
struct SliceInstance {
    int d = 2;
    int k = 0;
    std::vector<Int> c;
    AffineLattice refinement = AffineLattice::standard(2);
};
LatticePolytope slice_simplex_plain(const SliceInstance& inst);    // edge at k
LatticePolytope slice_simplex_shifted(const SliceInstance& inst);  // heights applied
LatticePolytope slice_simplex_standard(const SliceInstance& inst); // edge at 0

// Random instances: checks that pi/psi are height-shifting bijections
// between the slice groups, and that the degree-2 layers match whenever the
// groups have no height-1 or height-3 elements.
CheckReport verify_slice_maps(int instances, std::uint64_t seed);

// Peels one slice off the prism over `refinement` and verifies the count
// and h*-polynomial identities between the prism, the peeled prism, the
// slice, and their shared facet.
CheckReport verify_inclusion_exclusion(const std::vector<Int>& heights,
                                       const AffineLattice& refinement);

// fixed worked examples with frozen expected values
CheckReport verify_reference_values();

// random simplex with vertex matrix in Hermite form, det in [1, max_volume]
IntMatrix random_hnf_matrix(int dim, long long max_volume, Rng& rng);

// random superlattice of Z^dim of index in [1, max_index]
AffineLattice random_refinement(int dim, int max_index, Rng& rng);

// product of `ops` random elementary row operations
IntMatrix random_unimodular(int dim, int ops, Rng& rng);

} // namespace hstar
