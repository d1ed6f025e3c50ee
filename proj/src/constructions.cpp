#include "hstar/constructions.hpp"

#include <utility>

#include "hstar/ehrhart.hpp"
#include "hstar/error.hpp"
#include "hstar/lattice.hpp"

namespace hstar {

namespace {

std::vector<RatVec> rat_inverse_rows(const IntMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw Degenerate("singular matrix");
        std::swap(a[c], a[piv]);
        Rat p = a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<RatVec> inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

std::vector<RatVec> to_rat_points(const std::vector<IntVec>& pts) {
    std::vector<RatVec> r;
    r.reserve(pts.size());
    for (const IntVec& p : pts) r.push_back(to_rat(p));
    return r;
}

} // namespace

LatticePolytope pyramid(const LatticePolytope& q) {
    int d = q.dim();
    std::vector<IntVec> verts;
    verts.reserve(q.vertex_count() + 1);
    for (const IntVec& v : q.vertices()) {
        IntVec w = v;
        w.push_back(0);
        verts.push_back(std::move(w));
    }
    IntVec apex(d + 1, Int(0));
    apex[d] = 1;
    verts.push_back(std::move(apex));
    return LatticePolytope(d + 1, std::move(verts));
}

LatticePolytope join(const LatticePolytope& p, const LatticePolytope& q) {
    int m = p.dim();
    int n = q.dim();
    int D = m + n + 1;
    std::vector<IntVec> verts;
    verts.reserve(p.vertex_count() + q.vertex_count());
    for (const IntVec& v : p.vertices()) {
        IntVec w(D, Int(0));
        for (int j = 0; j < m; ++j) w[j] = v[j];
        verts.push_back(std::move(w));
    }
    for (const IntVec& v : q.vertices()) {
        IntVec w(D, Int(0));
        for (int j = 0; j < n; ++j) w[m + j] = v[j];
        w[D - 1] = 1;
        verts.push_back(std::move(w));
    }
    return LatticePolytope(D, std::move(verts));
}

LatticePolytope lawrence_prism(const std::vector<Int>& heights) {
    int d = static_cast<int>(heights.size());
    if (d < 1) throw Degenerate("prism needs at least one height");
    bool any = false;
    for (const Int& a : heights) {
        if (a < 0) throw NegativeCoefficient("prism heights must be nonnegative");
        if (a > 0) any = true;
    }
    if (!any) throw Degenerate("prism with all heights zero is not full-dimensional");

    std::vector<IntVec> verts;
    IntVec zero(d, Int(0));
    verts.push_back(zero);
    if (heights[0] > 0) {
        IntVec v = zero;
        v[d - 1] = heights[0];
        verts.push_back(std::move(v));
    }
    for (int i = 1; i < d; ++i) {
        IntVec v(d, Int(0));
        v[i - 1] = 1;
        verts.push_back(v);
        if (heights[i] > 0) {
            v[d - 1] = heights[i];
            verts.push_back(std::move(v));
        }
    }
    return LatticePolytope(d, std::move(verts));
}

LatticePolytope exceptional_simplex(int d) {
    if (d < 2) throw Degenerate("needs dimension at least 2");
    std::vector<IntVec> base = {
        {Int(0), Int(0)}, {Int(2), Int(0)}, {Int(0), Int(2)}};
    LatticePolytope p(2, base);
    for (int i = 2; i < d; ++i) p = pyramid(p);
    return p;
}

LatticePolytope concentrated_simplex(int s, const Int& b) {
    if (s < 1) throw Degenerate("needs s >= 1");
    if (b < 1) throw Degenerate("needs b >= 1");
    int d = 2 * s - 1;

    // refine Z^d by the alternating vector (b, 1, b, 1, ...) / (b+1)
    RatVec w(d);
    for (int j = 0; j < d; ++j)
        w[j] = (j % 2 == 0) ? Rat(b, b + 1) : Rat(1, b + 1);
    std::vector<RatVec> gens;
    for (int i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    gens.push_back(w);
    AffineLattice N(RatVec(d, Rat(0)), gens);

    std::vector<RatVec> verts;
    verts.push_back(RatVec(d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        verts.push_back(std::move(e));
    }
    LatticePolytope p(d, rebase(verts, N));

    HStarVector h = hstar_group(p);
    for (int i = 0; i <= d; ++i) {
        Int want = (i == 0) ? Int(1) : (i == s ? b : Int(0));
        if (h[i] != want)
            throw ConstructionSelfCheckFailed(
                "expected 1 + " + b.str() + " t^" + std::to_string(s) +
                ", got " + h.to_string());
    }
    return p;
}

SpanningResult spanning(const LatticePolytope& p) {
    int d = p.dim();
    std::vector<IntVec> pts = lattice_points(p, 1);
    AffineLattice span = affine_span(to_rat_points(pts));
    if (span.rank() != d)
        throw NotFullDimensional("lattice points do not affinely span");

    std::vector<IntVec> newverts = rebase(to_rat_points(p.vertices()), span);
    Int idx = lattice_index(span, AffineLattice::standard(d));

    // The original coordinate lattice, rewritten in the new coordinates:
    // z(x) = (x - base) * den * B^{-1}.
    const IntMatrix& B = span.basis_numerators();
    Int den = span.denominator();
    std::vector<RatVec> binv = rat_inverse_rows(B);
    const RatVec& base = span.base_point();
    RatVec zbase(d, Rat(0));
    for (int j = 0; j < d; ++j) {
        Rat s(0);
        for (int i = 0; i < d; ++i) s += base[i] * binv[i][j];
        zbase[j] = -s * den;
    }
    std::vector<RatVec> zgens(d, RatVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) zgens[i][j] = binv[i][j] * den;
    AffineLattice original(zbase, zgens);

    LatticePolytope out(d, std::move(newverts));
    out.set_refinement(original);
    return {std::move(out), idx};
}

std::vector<LatticePolytope> section_simplices(const std::vector<Int>& heights,
                                               const AffineLattice& refinement) {
    int d = static_cast<int>(heights.size());
    if (d < 1) throw Degenerate("needs at least one height");
    bool any = false;
    for (const Int& a : heights) {
        if (a < 0) throw NegativeCoefficient("heights must be nonnegative");
        if (a > 0) any = true;
    }
    if (!any) throw Degenerate("all heights zero");

    std::vector<LatticePolytope> out;
    for (int i = 0; i < d; ++i) {
        for (Int j = heights[i]; j >= 1; --j) {
            std::vector<RatVec> verts(d + 1, RatVec(d, Rat(0)));
            for (int m = 0; m < d; ++m) {
                if (m >= 1) verts[m][m - 1] = 1;
                if (m == i) verts[m][d - 1] = Rat(j - 1);
                else if (m > i) verts[m][d - 1] = Rat(heights[m]);
            }
            if (i >= 1) verts[d][i - 1] = 1;
            verts[d][d - 1] = Rat(j);
            out.emplace_back(d, rebase(verts, refinement));
        }
    }
    return out;
}

} // namespace hstar
