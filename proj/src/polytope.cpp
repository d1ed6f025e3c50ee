#include "hstar/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <stdexcept>

namespace hstar {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int r = a % b; a = b; b = r; }
    return a;
}

int rank_of(const IntMatrix& m) {
    HnfResult r = hnf(m);
    int rank = 0;
    for (int i = 0; i < r.h.rows(); ++i)
        for (int j = 0; j < r.h.cols(); ++j)
            if (r.h(i, j) != 0) { rank = i + 1; break; }
    return rank;
}

// normal of the hyperplane through d affinely independent points, as the
// cofactor vector of the (d-1) x d matrix of difference rows
IntVec hyperplane_normal(const std::vector<IntVec>& pts, const std::vector<int>& idx, int dim) {
    IntVec n(dim);
    if (dim == 0) return n;
    IntMatrix e(dim - 1, dim);
    for (int i = 1; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            e(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
    for (int j = 0; j < dim; ++j) {
        IntMatrix minor(dim - 1, dim - 1);
        for (int r = 0; r < dim - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor(r, cc++) = e(r, c);
            }
        }
        Int d = det(minor);
        n[j] = (j % 2 == 0) ? d : Int(-d);
    }
    return n;
}

std::vector<HRep::Facet> facets_of_cloud(const std::vector<IntVec>& pts, int dim) {
    std::vector<HRep::Facet> out;
    if (dim == 0) return out;
    int npts = static_cast<int>(pts.size());
    std::set<std::pair<IntVec, Int>> seen;
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i) idx[i] = i;
    for (;;) {
        IntVec n = hyperplane_normal(pts, idx, dim);
        bool zero = true;
        for (const Int& x : n)
            if (x != 0) { zero = false; break; }
        if (!zero) {
            Int g = 0;
            for (const Int& x : n) g = gcd_int(g, x);
            for (Int& x : n) x /= g;
            Int b = 0;
            for (int j = 0; j < dim; ++j) b += n[j] * pts[idx[0]][j];
            bool above = false, below = false;
            for (const auto& p : pts) {
                Int v = 0;
                for (int j = 0; j < dim; ++j) v += n[j] * p[j];
                if (v > b) above = true;
                else if (v < b) below = true;
                if (above && below) break;
            }
            if (!(above && below)) {
                if (above) { // flip so the polytope satisfies n * x <= b
                    for (Int& x : n) x = -x;
                    b = -b;
                }
                if (seen.emplace(n, b).second) out.push_back({std::move(n), std::move(b)});
            }
        }
        // next d-subset
        int i = dim - 1;
        while (i >= 0 && idx[i] == npts - dim + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const HRep::Facet& a, const HRep::Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    });
    return out;
}

bool point_is_vertex(const std::vector<HRep::Facet>& fs, const IntVec& p, int dim) {
    std::vector<IntVec> active;
    for (const auto& f : fs) {
        Int v = 0;
        for (int j = 0; j < dim; ++j) v += f.normal[j] * p[j];
        if (v == f.offset) active.push_back(f.normal);
    }
    if (static_cast<int>(active.size()) < dim) return false;
    return rank_of(IntMatrix::from_rows(active, dim)) == dim;
}

} // namespace

LatticePolytope::LatticePolytope(int ambient_dim, std::vector<IntVec> vertices,
                                 std::optional<AffineLattice> refinement)
    : dim_(ambient_dim), verts_(std::move(vertices)), refinement_(std::move(refinement)) {
    if (verts_.empty()) throw NotFullDimensional("polytope needs at least one vertex");
    for (const auto& v : verts_)
        if (static_cast<int>(v.size()) != dim_)
            throw DimensionMismatch("vertex length does not match ambient dimension");
    {
        auto sorted = verts_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw RedundantVertex("vertex listed twice");
    }
    IntMatrix diffs(static_cast<int>(verts_.size()) - 1, dim_);
    for (size_t i = 1; i < verts_.size(); ++i)
        for (int j = 0; j < dim_; ++j)
            diffs(static_cast<int>(i) - 1, j) = verts_[i][j] - verts_[0][j];
    if (rank_of(diffs) != dim_)
        throw NotFullDimensional("vertices do not span the ambient space");
    if (vertex_count() > dim_ + 1) {
        auto fs = facets_of_cloud(verts_, dim_);
        for (const auto& v : verts_)
            if (!point_is_vertex(fs, v, dim_))
                throw RedundantVertex("point is inside the hull of the others");
    }
}

bool LatticePolytope::same_polytope(const LatticePolytope& o) const {
    if (dim_ != o.dim_ || verts_.size() != o.verts_.size()) return false;
    auto a = verts_, b = o.verts_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

HRep facets(const LatticePolytope& p) {
    HRep h;
    h.dim = p.dim();
    h.facets = facets_of_cloud(p.vertices(), p.dim());
    return h;
}

Position contains(const HRep& h, const RatVec& point) {
    if (static_cast<int>(point.size()) != h.dim)
        throw DimensionMismatch("point length does not match polytope dimension");
    bool boundary = false;
    for (const auto& f : h.facets) {
        Rat v = 0;
        for (int j = 0; j < h.dim; ++j) v += Rat(f.normal[j]) * point[j];
        if (v > Rat(f.offset)) return Position::Outside;
        if (v == Rat(f.offset)) boundary = true;
    }
    return boundary ? Position::Boundary : Position::Interior;
}

namespace {

// Depth-first enumeration of integer points satisfying n * x <= cap,
// restricted to the bounding box. At each level the feasible range of the
// next coordinate is cut down using precomputed suffix minima of each
// inequality, so the walk visits little more than the points themselves.
template <typename T>
struct PointWalk {
    int dim = 0;
    int nfac = 0;
    std::vector<T> nrm;    // nfac x dim
    std::vector<T> cap;    // per facet
    std::vector<T> lo, hi; // box
    std::vector<T> sufflo; // (dim + 1) x nfac: min of suffix contribution
    std::vector<T> part;   // running partial sums per facet
    std::vector<T> cur;
    Int count = 0;
    std::vector<IntVec>* collect = nullptr;

    static T fdiv(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, Int>) {
            return floor_div(a, b);
        } else {
            T q = a / b, r = a % b;
            if (r != 0 && ((a < 0) != (b < 0))) --q;
            return q;
        }
    }

    void prepare() {
        sufflo.assign(static_cast<size_t>(dim + 1) * nfac, T(0));
        for (int j = dim - 1; j >= 0; --j)
            for (int f = 0; f < nfac; ++f) {
                const T& c = nrm[static_cast<size_t>(f) * dim + j];
                T best = c >= 0 ? c * lo[j] : c * hi[j];
                sufflo[static_cast<size_t>(j) * nfac + f] =
                    sufflo[static_cast<size_t>(j + 1) * nfac + f] + best;
            }
        part.assign(nfac, T(0));
        cur.assign(dim, T(0));
    }

    void run(int j) {
        if (j == dim) {
            ++count;
            if (collect) {
                IntVec p(dim);
                for (int t = 0; t < dim; ++t) p[t] = Int(cur[t]);
                collect->push_back(std::move(p));
            }
            return;
        }
        T a = lo[j], b = hi[j];
        for (int f = 0; f < nfac; ++f) {
            const T& c = nrm[static_cast<size_t>(f) * dim + j];
            // n_j * x + (suffix after j) <= cap - part
            T room = cap[f] - part[f] - sufflo[static_cast<size_t>(j + 1) * nfac + f];
            if (c > 0) {
                T ub = fdiv(room, c);
                if (ub < b) b = ub;
            } else if (c < 0) {
                T lb = -fdiv(room, -c); // ceil(room / c) for negative c
                if (lb > a) a = lb;
            } else if (room < 0) {
                return;
            }
            if (a > b) return;
        }
        for (T x = a; x <= b; ++x) {
            cur[j] = x;
            for (int f = 0; f < nfac; ++f)
                part[f] += nrm[static_cast<size_t>(f) * dim + j] * x;
            run(j + 1);
            for (int f = 0; f < nfac; ++f)
                part[f] -= nrm[static_cast<size_t>(f) * dim + j] * x;
        }
    }
};

Int count_impl(const LatticePolytope& p, int k, bool interior, std::vector<IntVec>* collect) {
    if (k < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    int d = p.dim();
    if (k == 0 || d == 0) {
        // the origin, or a point polytope in dimension zero
        Int c = (k == 0 && d > 0 && interior) ? 0 : 1;
        if (collect && c == 1) collect->push_back(IntVec(d));
        return c;
    }
    HRep h = facets(p);
    int nfac = static_cast<int>(h.facets.size());

    std::vector<Int> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        lo[j] = p.vertices()[0][j];
        hi[j] = p.vertices()[0][j];
        for (const auto& v : p.vertices()) {
            if (v[j] < lo[j]) lo[j] = v[j];
            if (v[j] > hi[j]) hi[j] = v[j];
        }
        lo[j] *= k;
        hi[j] *= k;
    }
    std::vector<Int> cap(nfac);
    for (int f = 0; f < nfac; ++f)
        cap[f] = h.facets[f].offset * k - (interior ? 1 : 0);

    // use machine integers when every partial sum provably fits
    Int magnitude = 0;
    for (int f = 0; f < nfac; ++f) {
        Int m = abs(cap[f]);
        for (int j = 0; j < d; ++j) {
            Int b = abs(lo[j]) > abs(hi[j]) ? abs(lo[j]) : abs(hi[j]);
            m += abs(h.facets[f].normal[j]) * b;
        }
        if (m > magnitude) magnitude = m;
    }
    bool narrow = magnitude < Int(std::numeric_limits<long long>::max() / 4);

    if (narrow) {
        PointWalk<long long> w;
        w.dim = d;
        w.nfac = nfac;
        w.nrm.resize(static_cast<size_t>(nfac) * d);
        for (int f = 0; f < nfac; ++f)
            for (int j = 0; j < d; ++j)
                w.nrm[static_cast<size_t>(f) * d + j] =
                    h.facets[f].normal[j].convert_to<long long>();
        w.cap.resize(nfac);
        for (int f = 0; f < nfac; ++f) w.cap[f] = cap[f].convert_to<long long>();
        w.lo.resize(d);
        w.hi.resize(d);
        for (int j = 0; j < d; ++j) {
            w.lo[j] = lo[j].convert_to<long long>();
            w.hi[j] = hi[j].convert_to<long long>();
        }
        w.collect = collect;
        w.prepare();
        w.run(0);
        return w.count;
    }
    PointWalk<Int> w;
    w.dim = d;
    w.nfac = nfac;
    w.nrm.resize(static_cast<size_t>(nfac) * d);
    for (int f = 0; f < nfac; ++f)
        for (int j = 0; j < d; ++j) w.nrm[static_cast<size_t>(f) * d + j] = h.facets[f].normal[j];
    w.cap = cap;
    w.lo = lo;
    w.hi = hi;
    w.collect = collect;
    w.prepare();
    w.run(0);
    return w.count;
}

} // namespace

Int count_points(const LatticePolytope& p, int k) { return count_impl(p, k, false, nullptr); }

Int count_interior(const LatticePolytope& p, int k) { return count_impl(p, k, true, nullptr); }

std::vector<IntVec> lattice_points(const LatticePolytope& p, int k) {
    std::vector<IntVec> pts;
    count_impl(p, k, false, &pts);
    return pts;
}

bool is_simplex(const LatticePolytope& p) { return p.vertex_count() == p.dim() + 1; }

LatticePolytope restrict_to_affine_hull(const std::vector<IntVec>& vertices, int ambient_dim) {
    if (vertices.empty()) throw NotFullDimensional("empty vertex set");
    IntMatrix diffs(static_cast<int>(vertices.size()) - 1, ambient_dim);
    for (size_t i = 1; i < vertices.size(); ++i)
        for (int j = 0; j < ambient_dim; ++j)
            diffs(static_cast<int>(i) - 1, j) = vertices[i][j] - vertices[0][j];
    SnfResult s = snf(diffs);
    int r = 0;
    for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
        if (s.d(i, i) != 0) r = i + 1;
    if (r == ambient_dim) return LatticePolytope(ambient_dim, vertices);

    // saturation of the difference lattice: with u * diffs * v diagonal,
    // the first r rows of v^{-1} span (affine hull - v0) ∩ Z^dim
    IntMatrix vinv = inverse_unimodular(s.v);
    std::vector<RatVec> gens;
    for (int i = 0; i < r; ++i) gens.push_back(to_rat(vinv.row(i)));
    AffineLattice hull_lattice(to_rat(vertices[0]), gens);
    std::vector<RatVec> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices) pts.push_back(to_rat(v));
    return LatticePolytope(r, rebase(pts, hull_lattice));
}

std::vector<size_t> hull_vertex_indices(const std::vector<IntVec>& points, int dim) {
    IntMatrix diffs(static_cast<int>(points.size()) - 1, dim);
    for (size_t i = 1; i < points.size(); ++i)
        for (int j = 0; j < dim; ++j)
            diffs(static_cast<int>(i) - 1, j) = points[i][j] - points[0][j];
    if (rank_of(diffs) != dim)
        throw NotFullDimensional("point cloud does not span the ambient space");
    auto fs = facets_of_cloud(points, dim);
    std::vector<size_t> out;
    for (size_t i = 0; i < points.size(); ++i)
        if (point_is_vertex(fs, points[i], dim)) out.push_back(i);
    return out;
}

} // namespace hstar
