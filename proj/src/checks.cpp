#include "hstar/checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "hstar/error.hpp"
#include "hstar/lattice.hpp"

namespace hstar {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// primitive vector orthogonal to the rows of a full-rank (d-1) x d matrix,
// built from the signed maximal minors
IntVec kernel_normal(const IntMatrix& rows) {
    int d = rows.cols();
    IntVec n(d, Int(0));
    for (int j = 0; j < d; ++j) {
        IntMatrix minor(d - 1, d - 1);
        for (int i = 0; i < d - 1; ++i) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == j) continue;
                minor(i, cc++) = rows(i, c);
            }
        }
        Int m = det(minor);
        n[j] = (j % 2 == 0) ? m : Int(-m);
    }
    Int g = 0;
    for (const Int& x : n) g = gcd_int(g, x);
    if (g == 0) throw Degenerate("rows do not span a hyperplane");
    if (g > 1)
        for (Int& x : n) x /= g;
    return n;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec primitive_direction(const IntVec& a, const IntVec& b) {
    IntVec u(a.size());
    Int g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u[i] = b[i] - a[i];
        g = gcd_int(g, u[i]);
    }
    if (g > 1)
        for (Int& x : u) x /= g;
    for (const Int& x : u) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : u) y = -y;
        break;
    }
    return u;
}

// unimodular R with u * R = last unit vector, for primitive u
IntMatrix completion_to_last_axis(const IntVec& u) {
    int d = static_cast<int>(u.size());
    IntMatrix um(1, d);
    for (int j = 0; j < d; ++j) um(0, j) = u[j];
    SnfResult s = snf(um);
    if (s.d(0, 0) != 1) throw Degenerate("direction is not primitive");
    IntMatrix R = s.v;
    IntVec w = mul_vec(u, R);
    if (w[0] == -1) {
        for (int i = 0; i < d; ++i) R(i, 0) = -R(i, 0);
    } else if (w[0] != 1) {
        throw Degenerate("direction completion failed");
    }
    if (d > 1) R.swap_cols(0, d - 1);
    return R;
}

struct PrismMatch {
    std::vector<Int> heights;
    AffineMap map;
};

std::optional<PrismMatch> recognize_prism(const LatticePolytope& p) {
    int d = p.dim();
    const auto& verts = p.vertices();
    int n = p.vertex_count();

    std::set<IntVec> dirs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dirs.insert(primitive_direction(verts[i], verts[j]));

    for (const IntVec& u : dirs) {
        IntMatrix R = completion_to_last_axis(u);

        std::map<IntVec, std::vector<Int>> fibers;
        for (const IntVec& v : verts) {
            IntVec y = mul_vec(v, R);
            IntVec w(y.begin(), y.end() - 1);
            fibers[w].push_back(y[d - 1]);
        }
        if (static_cast<int>(fibers.size()) != d) continue;

        bool ok = true;
        for (const auto& kv : fibers)
            if (kv.second.size() > 2) { ok = false; break; }
        if (!ok) continue;

        std::vector<IntVec> basepts;
        std::vector<Int> lo, hi;
        for (const auto& kv : fibers) {
            basepts.push_back(kv.first);
            Int a = kv.second[0], b = kv.second.back();
            lo.push_back(std::min(a, b));
            hi.push_back(std::max(a, b));
        }

        IntMatrix D(d - 1, d - 1);
        for (int i = 1; i < d; ++i)
            for (int j = 0; j < d - 1; ++j)
                D(i - 1, j) = basepts[i][j] - basepts[0][j];
        Int vol = det(D);
        if (vol != 1 && vol != -1) continue;

        std::vector<Int> heights(d);
        for (int i = 0; i < d; ++i) heights[i] = hi[i] - lo[i];

        IntMatrix C = inverse_unimodular(D);
        IntVec lambda(d - 1);
        for (int i = 1; i < d; ++i) lambda[i - 1] = lo[i] - lo[0];

        IntVec clam(d - 1, Int(0));
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d - 1; ++j) clam[i] += C(i, j) * lambda[j];

        IntMatrix S(d, d);
        for (int i = 0; i < d - 1; ++i) {
            for (int j = 0; j < d - 1; ++j) S(i, j) = C(i, j);
            S(i, d - 1) = -clam[i];
        }
        S(d - 1, d - 1) = 1;

        IntVec b0C(d - 1, Int(0));
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d - 1; ++j) b0C[j] += basepts[0][i] * C(i, j);
        Int b0Clam = 0;
        for (int j = 0; j < d - 1; ++j) b0Clam += basepts[0][j] * clam[j];

        IntVec shift(d);
        for (int j = 0; j < d - 1; ++j) shift[j] = -b0C[j];
        shift[d - 1] = -lo[0] + b0Clam;

        AffineMap f{mul(R, S), shift};

        std::vector<IntVec> mapped;
        mapped.reserve(verts.size());
        for (const IntVec& v : verts) mapped.push_back(f.apply(v));
        std::sort(mapped.begin(), mapped.end());
        std::vector<IntVec> target = lawrence_prism(heights).vertices();
        std::sort(target.begin(), target.end());
        if (mapped != target) continue;

        return PrismMatch{std::move(heights), std::move(f)};
    }
    return std::nullopt;
}

} // namespace

CheckReport scott_dim2(const Int& h1, const Int& h2) {
    CheckReport r;
    r.name = "scott-dim2";
    r.note("h1", h1);
    r.note("h2", h2);
    if (h2 == 0) {
        r.branch = "case-1";
    } else if (h2 <= h1 && h1 <= 3 * h2 + 3) {
        r.branch = "case-2";
    } else if (h1 == 7 && h2 == 1) {
        r.branch = "case-3";
    } else {
        r.branch = "none";
        r.passed = false;
    }
    return r;
}

CheckReport scott_universal(const Int& h1, const Int& h2) {
    CheckReport r;
    r.name = "scott-universal";
    r.note("h1", h1);
    r.note("h2", h2);
    if (h2 == 0) {
        r.branch = "case-1";
    } else if (h1 <= 3 * h2 + 3) {
        r.branch = "case-2";
    } else if (h1 == 7 && h2 == 1) {
        r.branch = "case-3";
    } else {
        r.branch = "none";
        r.passed = false;
    }
    return r;
}

CheckReport main_theorem(const LatticePolytope& p) {
    HStarVector h = hstar_auto(p);
    CheckReport r;
    r.name = "main-theorem";
    r.note("hstar", h.to_string());
    Int h3 = h.at_or_zero(3);
    if (h3 != 0) {
        r.branch = "hypothesis-unmet";
        r.note("h3", h3);
        return r;
    }
    CheckReport s = scott_universal(h.at_or_zero(1), h.at_or_zero(2));
    r.branch = s.branch;
    r.passed = s.passed;
    for (auto& w : s.witnesses) r.witnesses.push_back(std::move(w));
    return r;
}

CheckReport hibi_lower(const HStarVector& h) {
    CheckReport r;
    r.name = "hibi-lower";
    int d = h.poly_dim();
    if (d <= 2) {
        r.branch = "vacuous";
        return r;
    }
    r.branch = "range";
    for (int i = 1; i <= d - 2; ++i) {
        Int tail = 0, head = 0;
        for (int m = d - i; m <= d - 1; ++m) tail += h[m];
        for (int m = 2; m <= i + 1; ++m) head += h[m];
        if (tail > head) {
            r.passed = false;
            r.note("i", static_cast<long long>(i));
            r.note("tail", tail);
            r.note("head", head);
            return r;
        }
    }
    return r;
}

CheckReport stanley(const HStarVector& h) {
    CheckReport r;
    r.name = "stanley";
    int s = h.degree();
    r.note("degree", static_cast<long long>(s));
    for (int i = 0; i <= s; ++i) {
        Int head = 0, tail = 0;
        for (int m = 0; m <= i; ++m) head += h[m];
        for (int m = s - i; m <= s; ++m) tail += h[m];
        if (head > tail) {
            r.passed = false;
            r.note("i", static_cast<long long>(i));
            r.note("head", head);
            r.note("tail", tail);
            return r;
        }
    }
    return r;
}

CheckReport hibi_interior(const HStarVector& h) {
    CheckReport r;
    r.name = "hibi-interior";
    int d = h.poly_dim();
    if (d < 1 || h[d] == 0) {
        r.branch = "not-applicable";
        return r;
    }
    r.branch = "interior";
    for (int i = 1; i <= d - 1; ++i) {
        if (h[i] < h[1]) {
            r.passed = false;
            r.note("i", static_cast<long long>(i));
            r.note("h1", h[1]);
            r.note("hi", h[i]);
            return r;
        }
    }
    return r;
}

CheckReport spanning_gapless(const HStarVector& h) {
    CheckReport r;
    r.name = "spanning-gapless";
    int s = h.degree();
    r.note("degree", static_cast<long long>(s));
    for (int i = 0; i <= s; ++i) {
        if (h[i] < 1) {
            r.passed = false;
            r.note("gap-at", static_cast<long long>(i));
            return r;
        }
    }
    return r;
}

IntVec AffineMap::apply(const IntVec& x) const {
    IntVec y = mul_vec(x, linear);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift[i];
    return y;
}

RatVec AffineMap::apply(const RatVec& x) const {
    RatVec y(static_cast<std::size_t>(linear.cols()), Rat(0));
    for (int j = 0; j < linear.cols(); ++j) {
        Rat s(0);
        for (int i = 0; i < linear.rows(); ++i)
            if (linear(i, j) != 0) s += x[i] * Rat(linear(i, j));
        y[j] = s + Rat(shift[j]);
    }
    return y;
}

AffineLattice transform_lattice(const AffineLattice& L, const AffineMap& f) {
    RatVec base = f.apply(L.base_point());
    std::vector<RatVec> gens;
    gens.reserve(L.rank());
    for (int i = 0; i < L.rank(); ++i) {
        RatVec g = L.basis_row(i);
        RatVec out(static_cast<std::size_t>(f.linear.cols()), Rat(0));
        for (int j = 0; j < f.linear.cols(); ++j) {
            Rat s(0);
            for (int k = 0; k < f.linear.rows(); ++k)
                if (f.linear(k, j) != 0) s += g[k] * Rat(f.linear(k, j));
            out[j] = s;
        }
        gens.push_back(std::move(out));
    }
    return AffineLattice(std::move(base), gens);
}

StripResult strip_pyramids(const LatticePolytope& p0) {
    LatticePolytope p = p0;
    int layers = 0;
    for (;;) {
        int d = p.dim();
        if (d < 1) break;
        const auto& verts = p.vertices();
        int n = p.vertex_count();
        bool stripped = false;
        for (int v = 0; v < n && !stripped; ++v) {
            std::vector<IntVec> rest;
            rest.reserve(n - 1);
            for (int i = 0; i < n; ++i)
                if (i != v) rest.push_back(verts[i]);

            IntMatrix diffs(static_cast<int>(rest.size()) - 1, d);
            for (std::size_t i = 1; i < rest.size(); ++i)
                for (int j = 0; j < d; ++j)
                    diffs(static_cast<int>(i) - 1, j) = rest[i][j] - rest[0][j];
            HnfResult hf = hnf(diffs);
            int rank = 0;
            for (int i = 0; i < hf.h.rows(); ++i)
                for (int j = 0; j < hf.h.cols(); ++j)
                    if (hf.h(i, j) != 0) { rank = i + 1; break; }
            if (rank != d - 1) continue;

            IntMatrix basis(d - 1, d);
            for (int i = 0; i < d - 1; ++i)
                for (int j = 0; j < d; ++j) basis(i, j) = hf.h(i, j);
            IntVec normal = kernel_normal(basis);
            Int height = dot(normal, verts[v]) - dot(normal, rest[0]);
            if (height < 0) height = -height;
            if (height == 1) {
                p = restrict_to_affine_hull(rest, d);
                ++layers;
                stripped = true;
            }
        }
        if (!stripped) break;
    }
    return {std::move(p), layers};
}

DegreeOneClass classify_degree_le1(const LatticePolytope& p) {
    HStarVector h = hstar_auto(p);
    if (h.degree() > 1) return {DegreeOneClass::Tag::NotDegreeLeOne, {}, std::nullopt};

    StripResult st = strip_pyramids(p);
    if (st.base.dim() == 2 && st.base.vertex_count() == 3) {
        HStarVector bh = hstar_auto(st.base);
        if (bh.volume() == 4 && bh[1] == 3)
            return {DegreeOneClass::Tag::ExceptionalSimplex, {}, std::nullopt};
    }

    if (auto m = recognize_prism(p))
        return {DegreeOneClass::Tag::LawrencePrism, std::move(m->heights),
                std::move(m->map)};

    throw ClassificationFailed("degree <= 1 polytope matched neither shape");
}

CheckReport divisibility_lawrence(const LatticePolytope& p) {
    CheckReport r;
    r.name = "divisibility";
    HStarVector h = hstar_auto(p);
    Int h1 = h.at_or_zero(1), h2 = h.at_or_zero(2), h3 = h.at_or_zero(3);
    r.note("hstar", h.to_string());
    if (h3 != 0) {
        r.branch = "not-applicable";
        r.note("reason", std::string("h3 nonzero"));
        return r;
    }

    SpanningResult sp = spanning(p);
    r.note("spanning-index", sp.index);

    DegreeOneClass cls;
    try {
        cls = classify_degree_le1(sp.polytope);
    } catch (const ClassificationFailed&) {
        r.branch = "classification-failed";
        r.passed = false;
        return r;
    }
    if (cls.tag != DegreeOneClass::Tag::LawrencePrism) {
        r.branch = "not-applicable";
        r.note("reason", std::string(cls.tag == DegreeOneClass::Tag::ExceptionalSimplex
                                         ? "spanning polytope is the exceptional simplex"
                                         : "spanning polytope has degree above one"));
        return r;
    }

    r.branch = "applies";
    Int b = 0;
    for (const Int& a : cls.heights) b += a;
    r.note("b", b);

    AffineLattice ambient =
        transform_lattice(*sp.polytope.refinement(), *cls.to_standard);
    std::vector<LatticePolytope> sections =
        section_simplices(cls.heights, ambient);

    Int c = -1;
    for (const LatticePolytope& s : sections) {
        HStarVector hs = hstar_group(s);
        if (hs.at_or_zero(1) != 0) {
            r.passed = false;
            r.note("slice-h1", hs.at_or_zero(1));
            return r;
        }
        Int c2 = hs.at_or_zero(2);
        if (c < 0) c = c2;
        else if (c != c2) {
            r.passed = false;
            r.note("slice-h2-a", c);
            r.note("slice-h2-b", c2);
            return r;
        }
    }
    r.note("c", c);

    r.require(h1 == b - 1);
    r.require(h2 == b * c);
    r.require(h2 % (h1 + 1) == 0);
    r.note("h1-plus-1", h1 + 1);
    r.note("h2-over-b", b == 0 ? Int(0) : h2 / b);
    return r;
}

} // namespace hstar
