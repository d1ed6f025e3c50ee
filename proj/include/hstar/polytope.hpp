#pragma once

#include <optional>
#include <vector>

#include "hstar/lattice.hpp"

namespace hstar {

enum class Position { Interior, Boundary, Outside };

// Facets n * x <= b with primitive integer normals. The inequality side
// fixes the sign of each normal, so the representation is canonical once
// the facets are sorted.
struct HRep {
    struct Facet {
        IntVec normal;
        Int offset;
    };
    int dim = 0;
    std::vector<Facet> facets;
};

// A full-dimensional lattice polytope, stored as its vertex list in the
// coordinates of its ambient lattice Z^d. The constructor rejects vertex
// lists that repeat a point, span less than the ambient dimension, or
// include a point that is not a vertex of the hull.
//
// When a polytope was rebased from a description over a finer or coarser
// lattice, the original lattice (expressed in the current coordinates)
// can ride along as refinement metadata.
class LatticePolytope {
public:
    LatticePolytope(int ambient_dim, std::vector<IntVec> vertices,
                    std::optional<AffineLattice> refinement = std::nullopt);

    int dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const std::optional<AffineLattice>& refinement() const { return refinement_; }
    void set_refinement(std::optional<AffineLattice> r) { refinement_ = std::move(r); }

    // identical vertex sets, order ignored
    bool same_polytope(const LatticePolytope& o) const;

private:
    int dim_;
    std::vector<IntVec> verts_;
    std::optional<AffineLattice> refinement_;
};

HRep facets(const LatticePolytope& p);

Position contains(const HRep& h, const RatVec& point);

// |kP ∩ Z^d| and |int(kP) ∩ Z^d|, by exact enumeration
Int count_points(const LatticePolytope& p, int k);
Int count_interior(const LatticePolytope& p, int k);

// the points themselves, in lexicographic order
std::vector<IntVec> lattice_points(const LatticePolytope& p, int k);

bool is_simplex(const LatticePolytope& p);

// Re-express a lower-dimensional vertex set as a full-dimensional polytope
// over the lattice induced on its affine hull. Lattice points correspond
// bijectively under the change of coordinates.
LatticePolytope restrict_to_affine_hull(const std::vector<IntVec>& vertices, int ambient_dim);

// Indices of the points that are vertices of the convex hull of a
// full-dimensional point cloud (helper for generated inputs).
std::vector<size_t> hull_vertex_indices(const std::vector<IntVec>& points, int dim);

} // namespace hstar
