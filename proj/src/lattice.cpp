#include "hstar/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace hstar {

namespace {

// g = gcd(a, b) > 0 with s*a + t*b = g
void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    g = r0; s = s0; t = t0;
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int r = a % b; a = b; b = r; }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int l = (a / g) * b;
    return l < 0 ? Int(-l) : l;
}

} // namespace

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (h(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) { h.swap_rows(piv, r); u.swap_rows(piv, r); }
        // zero out below the pivot with unimodular two-row combinations
        for (int i = r + 1; i < rows; ++i) {
            if (h(i, c) == 0) continue;
            Int a = h(r, c), b = h(i, c);
            if (b % a == 0) {
                Int q = b / a;
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                continue;
            }
            Int g, s, t;
            xgcd(a, b, g, s, t);
            Int ag = a / g, bg = b / g;
            for (int j = 0; j < cols; ++j) {
                Int x = h(r, j), y = h(i, j);
                h(r, j) = s * x + t * y;
                h(i, j) = -bg * x + ag * y;
            }
            for (int j = 0; j < rows; ++j) {
                Int x = u(r, j), y = u(i, j);
                u(r, j) = s * x + t * y;
                u(i, j) = -bg * x + ag * y;
            }
        }
        if (h(r, c) < 0) { h.negate_row(r); u.negate_row(r); }
        // reduce the entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    int rows = m.rows(), cols = m.cols();
    int n = std::min(rows, cols);
    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the active submatrix into (t, t)
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi < 0 || abs(d(i, j)) < abs(d(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) { pi = -1; break; }
            if (pi != t) { d.swap_rows(pi, t); u.swap_rows(pi, t); }
            if (pj != t) { d.swap_cols(pj, t); v.swap_cols(pj, t); }

            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t); // truncated: |remainder| < |pivot|
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide every remaining entry
            bool fixed = true;
            for (int i = t + 1; i < rows && fixed; ++i)
                for (int j = t + 1; j < cols && fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t < n && d(t, t) < 0) { d.negate_row(t); u.negate_row(t); }
        if (d(t, t) == 0) break; // the rest of the submatrix is zero
    }
    return {std::move(d), std::move(u), std::move(v)};
}

AffineLattice::AffineLattice(RatVec base, const std::vector<RatVec>& generators)
    : base_(std::move(base)) {
    int dim = ambient_dim();
    Int d = 1;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw DimensionMismatch("generator length does not match ambient dimension");
        for (const auto& x : g) d = lcm_int(d, boost::multiprecision::denominator(x));
    }
    IntMatrix b(static_cast<int>(generators.size()), dim);
    for (size_t i = 0; i < generators.size(); ++i)
        for (int j = 0; j < dim; ++j) {
            const Rat& x = generators[i][j];
            b(static_cast<int>(i), j) =
                boost::multiprecision::numerator(x) * (d / boost::multiprecision::denominator(x));
        }
    HnfResult r = hnf(b);
    int rank = 0;
    for (int i = 0; i < r.h.rows(); ++i) {
        bool nonzero = false;
        for (int j = 0; j < dim; ++j)
            if (r.h(i, j) != 0) { nonzero = true; break; }
        if (nonzero) rank = i + 1; // zero rows are last
    }
    num_ = IntMatrix(rank, dim);
    Int content = d;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < dim; ++j) {
            num_(i, j) = r.h(i, j);
            content = gcd_int(content, num_(i, j));
        }
    den_ = d;
    if (rank > 0 && content > 1) {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < dim; ++j) num_(i, j) /= content;
        den_ /= content;
    }
    if (rank == 0) den_ = 1;
}

AffineLattice AffineLattice::standard(int dim) {
    RatVec base(dim, Rat(0));
    std::vector<RatVec> gens;
    for (int i = 0; i < dim; ++i) {
        RatVec e(dim, Rat(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return AffineLattice(std::move(base), gens);
}

RatVec AffineLattice::basis_row(int i) const {
    RatVec r(ambient_dim());
    for (int j = 0; j < ambient_dim(); ++j) r[j] = Rat(num_(i, j)) / Rat(den_);
    return r;
}

std::optional<IntVec> AffineLattice::linear_coords(const RatVec& dir) const {
    int dim = ambient_dim();
    if (static_cast<int>(dir.size()) != dim)
        throw DimensionMismatch("vector length does not match ambient dimension");
    // solve z * num = den * dir over the integers, using the HNF pivots
    IntVec w(dim);
    for (int j = 0; j < dim; ++j) {
        Rat x = dir[j] * Rat(den_);
        if (!is_integer(x)) return std::nullopt;
        w[j] = boost::multiprecision::numerator(x);
    }
    IntVec z(rank());
    for (int i = 0; i < rank(); ++i) {
        int p = -1;
        for (int j = 0; j < dim; ++j)
            if (num_(i, j) != 0) { p = j; break; }
        assert(p >= 0);
        if (w[p] % num_(i, p) != 0) return std::nullopt;
        z[i] = w[p] / num_(i, p);
        if (z[i] != 0)
            for (int j = p; j < dim; ++j) w[j] -= z[i] * num_(i, j);
    }
    for (int j = 0; j < dim; ++j)
        if (w[j] != 0) return std::nullopt;
    return z;
}

std::optional<IntVec> AffineLattice::coords(const RatVec& p) const {
    int dim = ambient_dim();
    if (static_cast<int>(p.size()) != dim)
        throw DimensionMismatch("point length does not match ambient dimension");
    RatVec diff(dim);
    for (int j = 0; j < dim; ++j) diff[j] = p[j] - base_[j];
    return linear_coords(diff);
}

RatVec AffineLattice::point_at(const IntVec& z) const {
    if (static_cast<int>(z.size()) != rank())
        throw DimensionMismatch("coordinate length does not match lattice rank");
    RatVec p = base_;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < ambient_dim(); ++j)
            p[j] += Rat(z[i] * num_(i, j)) / Rat(den_);
    return p;
}

bool AffineLattice::operator==(const AffineLattice& o) const {
    if (ambient_dim() != o.ambient_dim() || rank() != o.rank()) return false;
    if (den_ != o.den_ || !(num_ == o.num_)) return false;
    return contains(o.base_);
}

AffineLattice affine_span(const std::vector<RatVec>& points) {
    if (points.empty())
        throw DimensionMismatch("affine span of an empty point set");
    std::vector<RatVec> gens;
    for (size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != points[0].size())
            throw DimensionMismatch("points of mixed dimension");
        RatVec g(points[0].size());
        for (size_t j = 0; j < g.size(); ++j) g[j] = points[i][j] - points[0][j];
        gens.push_back(std::move(g));
    }
    return AffineLattice(points[0], gens);
}

Int lattice_index(const AffineLattice& sub, const AffineLattice& super) {
    int dim = sub.ambient_dim();
    if (dim != super.ambient_dim())
        throw DimensionMismatch("lattices live in different ambient spaces");
    if (sub.rank() != dim || super.rank() != dim)
        throw NotSublattice("lattice index requires full-rank lattices");
    if (!super.contains(sub.base_point()))
        throw NotSublattice("base point is outside the super lattice");
    IntMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        auto z = super.linear_coords(sub.basis_row(i));
        if (!z) throw NotSublattice("basis vector is outside the super lattice");
        for (int j = 0; j < dim; ++j) m(i, j) = (*z)[j];
    }
    Int idx = det(m);
    if (idx < 0) idx = -idx;
    assert(idx != 0);
    return idx;
}

std::vector<IntVec> rebase(const std::vector<RatVec>& points, const AffineLattice& lattice) {
    std::vector<IntVec> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        auto z = lattice.coords(p);
        if (!z) throw PointNotInLattice("point is not in the lattice");
        out.push_back(std::move(*z));
    }
    return out;
}

} // namespace hstar
