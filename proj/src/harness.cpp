#include "hstar/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <thread>
#include <utility>

#include "hstar/error.hpp"
#include "hstar/lattice.hpp"

namespace hstar {

void enumerate_simplices(const EnumSpec& spec,
                         const std::function<void(const IntMatrix&)>& fn) {
    int d = spec.dim;
    if (d < 1) throw DimensionMismatch("enumeration needs dimension >= 1");
    if (spec.shard_total < 1 || spec.shard_index < 0 ||
        spec.shard_index >= spec.shard_total)
        throw std::invalid_argument("bad shard");
    if (spec.max_volume < 1) return;

    IntMatrix m(d, d);
    std::vector<std::pair<int, int>> cells;
    for (int j = 1; j < d; ++j)
        for (int i = 0; i < j; ++i) cells.emplace_back(i, j);

    unsigned long long counter = 0;
    auto emit_offdiag = [&]() {
        for (auto& [i, j] : cells) m(i, j) = 0;
        for (;;) {
            if (counter % static_cast<unsigned long long>(spec.shard_total) ==
                static_cast<unsigned long long>(spec.shard_index))
                fn(m);
            ++counter;
            std::size_t t = 0;
            for (; t < cells.size(); ++t) {
                auto [i, j] = cells[t];
                m(i, j) += 1;
                if (m(i, j) < m(j, j)) break;
                m(i, j) = 0;
            }
            if (t == cells.size()) break;
        }
    };

    std::function<void(int, Int)> choose_diag = [&](int i, Int prod) {
        if (i == d) {
            emit_offdiag();
            return;
        }
        for (Int v = 1; prod * v <= spec.max_volume; ++v) {
            m(i, i) = v;
            choose_diag(i + 1, prod * v);
        }
    };
    choose_diag(0, Int(1));
}

LatticePolytope hnf_simplex(const IntMatrix& h) {
    int d = h.rows();
    std::vector<IntVec> verts;
    verts.reserve(d + 1);
    verts.push_back(IntVec(d, Int(0)));
    for (int i = 0; i < d; ++i) verts.push_back(h.row(i));
    return LatticePolytope(d, std::move(verts));
}

void SweepSummary::merge(const SweepSummary& o) {
    total += o.total;
    h3_zero += o.h3_zero;
    scott_pass += o.scott_pass;
    inequality_failures += o.inequality_failures;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    inequality_witnesses.insert(inequality_witnesses.end(),
                                o.inequality_witnesses.begin(),
                                o.inequality_witnesses.end());
}

SweepSummary sweep_main_theorem(const EnumSpec& spec) {
    SweepSummary s;
    enumerate_simplices(spec, [&](const IntMatrix& hm) {
        LatticePolytope p = hnf_simplex(hm);
        HStarVector h = hstar_group(p);
        ++s.total;

        if (h.at_or_zero(3) == 0) {
            ++s.h3_zero;
            CheckReport rep = scott_universal(h.at_or_zero(1), h.at_or_zero(2));
            if (rep.passed) ++s.scott_pass;
            else s.violations.push_back(hm);
        }

        int d = h.poly_dim();
        bool net = stanley(h).passed && hibi_lower(h).passed &&
                   hibi_interior(h).passed;
        if (d >= 1 && h[d] > h[1]) net = false;
        if (d == 2 && !scott_dim2(h[1], h[2]).passed) net = false;
        if (!net) {
            ++s.inequality_failures;
            s.inequality_witnesses.push_back(hm);
        }
    });
    return s;
}

SweepSummary sweep_parallel(int dim, const Int& max_volume, int jobs) {
    if (jobs < 1) jobs = 1;
    std::vector<SweepSummary> parts(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t]() {
            EnumSpec spec;
            spec.dim = dim;
            spec.max_volume = max_volume;
            spec.shard_index = t;
            spec.shard_total = jobs;
            parts[t] = sweep_main_theorem(spec);
        });
    }
    for (auto& w : workers) w.join();
    SweepSummary out;
    for (const auto& part : parts) out.merge(part);
    return out;
}

namespace {

void check_tuple(const RatVec& r, int k, int clen) {
    int d = static_cast<int>(r.size()) - 1;
    if (clen >= 0 && clen != d)
        throw DimensionMismatch("coefficient vector length must be tuple length - 1");
    if (k < 0 || k >= d)
        throw DimensionMismatch("slot index out of range");
}

Rat weighted_sum(const RatVec& r, const std::vector<Int>& c) {
    Rat s(0);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (c[i] != 0 && r[i] != 0) s += r[i] * Rat(c[i]);
    return s;
}

} // namespace

RatVec pi_map(const RatVec& r, int k, const std::vector<Int>& c) {
    check_tuple(r, k, static_cast<int>(c.size()));
    int d = static_cast<int>(r.size()) - 1;
    Rat C = weighted_sum(r, c);
    RatVec out = r;
    out[k] = frac_part(C + r[d] * Rat(c[k] - 1));
    out[d] = frac_part(r[k] - r[d] * Rat(c[k] - 2) - C);
    return out;
}

RatVec pi_inv(const RatVec& r, int k, const std::vector<Int>& c) {
    check_tuple(r, k, static_cast<int>(c.size()));
    int d = static_cast<int>(r.size()) - 1;
    Rat C = weighted_sum(r, c);
    RatVec out = r;
    out[k] = frac_part(2 * r[k] + r[d] * Rat(1 - c[k]) - C);
    out[d] = frac_part(-r[k] + C + r[d] * Rat(c[k]));
    return out;
}

RatVec psi_map(const RatVec& r, int k) {
    check_tuple(r, k, -1);
    if (k == 0) return r;
    int d = static_cast<int>(r.size()) - 1;
    RatVec out = r;
    out[0] = frac_part(r[0] + r[d]);
    out[k] = frac_part(r[k] - r[d]);
    return out;
}

RatVec psi_inv(const RatVec& r, int k) {
    check_tuple(r, k, -1);
    if (k == 0) return r;
    int d = static_cast<int>(r.size()) - 1;
    RatVec out = r;
    out[0] = frac_part(r[0] - r[d]);
    out[k] = frac_part(r[k] + r[d]);
    return out;
}

namespace {

void validate_instance(const SliceInstance& inst) {
    if (inst.d < 1) throw DimensionMismatch("slice dimension must be >= 1");
    if (inst.k < 0 || inst.k >= inst.d)
        throw DimensionMismatch("slot index out of range");
    if (static_cast<int>(inst.c.size()) != inst.d)
        throw DimensionMismatch("coefficient vector must have length d");
    if (inst.refinement.ambient_dim() != inst.d ||
        inst.refinement.rank() != inst.d)
        throw DimensionMismatch("refinement must be a full-rank lattice in R^d");
}

} // namespace

LatticePolytope slice_simplex_plain(const SliceInstance& inst) {
    validate_instance(inst);
    int d = inst.d, k = inst.k;
    std::vector<RatVec> v(d + 1, RatVec(d, Rat(0)));
    for (int i = 1; i < d; ++i) v[i][i - 1] = 1;
    if (k >= 1) v[d][k - 1] = 1;
    v[d][d - 1] = 1;
    return LatticePolytope(d, rebase(v, inst.refinement));
}

LatticePolytope slice_simplex_shifted(const SliceInstance& inst) {
    validate_instance(inst);
    int d = inst.d, k = inst.k;
    std::vector<RatVec> v(d + 1, RatVec(d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        if (i >= 1) v[i][i - 1] = 1;
        v[i][d - 1] = Rat(inst.c[i]);
    }
    v[k][d - 1] = Rat(inst.c[k] - 1);
    if (k >= 1) v[d][k - 1] = 1;
    v[d][d - 1] = Rat(inst.c[k]);
    return LatticePolytope(d, rebase(v, inst.refinement));
}

LatticePolytope slice_simplex_standard(const SliceInstance& inst) {
    SliceInstance s = inst;
    s.k = 0;
    return slice_simplex_plain(s);
}

namespace {

std::vector<int> height_histogram(const LambdaGroup& g, int d) {
    std::vector<int> h(d + 1, 0);
    for (int t : g.heights) ++h[t];
    return h;
}

std::string tuple_to_string(const RatVec& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += numerator(r[i]).str();
        if (denominator(r[i]) != 1) s += "/" + denominator(r[i]).str();
    }
    return s + ")";
}

} // namespace

CheckReport verify_slice_maps(int instances, std::uint64_t seed) {
    CheckReport r;
    r.name = "slice-maps";
    Rng rng(seed);
    long long pi_checked = 0, psi_checked = 0, layer2_checked = 0;

    for (int made = 0; made < instances; ++made) {
        int d = 2 + static_cast<int>(rng() % 4);
        int k = static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        std::vector<Int> c(d);
        for (auto& x : c) x = static_cast<long long>(rng() % 5);
        SliceInstance inst{d, k, c, random_refinement(d, 6, rng)};

        LatticePolytope A = slice_simplex_plain(inst);
        LatticePolytope B = slice_simplex_shifted(inst);
        LatticePolytope Z = slice_simplex_standard(inst);
        LambdaGroup ga = lambda_group(A);
        LambdaGroup gb = lambda_group(B);
        LambdaGroup gz = lambda_group(Z);

        auto fail = [&](const std::string& why, const RatVec& elem) {
            r.passed = false;
            r.note("failure", why);
            r.note("instance-d", static_cast<long long>(d));
            r.note("instance-k", static_cast<long long>(k));
            r.note("element", tuple_to_string(elem));
        };

        if (ga.order() != gb.order() || ga.order() != gz.order()) {
            fail("group orders differ", RatVec{});
            return r;
        }

        for (std::size_t t = 0; t < ga.elements.size(); ++t) {
            RatVec img = pi_map(ga.elements[t], k, c);
            if (!gb.contains(img)) {
                fail("pi image not in target group", ga.elements[t]);
                return r;
            }
            if (std::abs(gb.height_of(img) - ga.heights[t]) > 1) {
                fail("pi moved height by more than one", ga.elements[t]);
                return r;
            }
            if (pi_inv(img, k, c) != ga.elements[t]) {
                fail("pi_inv did not undo pi", ga.elements[t]);
                return r;
            }
            ++pi_checked;
        }

        for (std::size_t t = 0; t < gz.elements.size(); ++t) {
            RatVec img = psi_map(gz.elements[t], k);
            if (!ga.contains(img)) {
                fail("psi image not in target group", gz.elements[t]);
                return r;
            }
            if (std::abs(ga.height_of(img) - gz.heights[t]) > 1) {
                fail("psi moved height by more than one", gz.elements[t]);
                return r;
            }
            if (psi_inv(img, k) != gz.elements[t]) {
                fail("psi_inv did not undo psi", gz.elements[t]);
                return r;
            }
            ++psi_checked;
        }

        // with no height-1 and no height-3 elements on either side, the
        // displacement bound forces the height-2 layers into bijection
        auto ha = height_histogram(ga, d);
        auto hb = height_histogram(gb, d);
        auto hz = height_histogram(gz, d);
        auto l2 = [&](const std::vector<int>& x) { return d >= 2 ? x[2] : 0; };
        auto empty13 = [&](const std::vector<int>& x) {
            return x[1] == 0 && (d < 3 || x[3] == 0);
        };
        if (empty13(ha) && empty13(hb)) {
            if (l2(ha) != l2(hb)) {
                fail("level-2 layers differ across pi", RatVec{});
                return r;
            }
            ++layer2_checked;
        }
        if (empty13(ha) && empty13(hz)) {
            if (l2(ha) != l2(hz)) {
                fail("level-2 layers differ across psi", RatVec{});
                return r;
            }
            ++layer2_checked;
        }
    }

    r.note("instances", static_cast<long long>(instances));
    r.note("pi-elements", pi_checked);
    r.note("psi-elements", psi_checked);
    r.note("layer2-cases", layer2_checked);
    return r;
}

CheckReport verify_inclusion_exclusion(const std::vector<Int>& heights,
                                       const AffineLattice& refinement) {
    CheckReport r;
    r.name = "slice-inclusion-exclusion";
    int d = static_cast<int>(heights.size());
    Int b = 0;
    for (const Int& a : heights) b += a;
    r.note("b", b);
    if (b < 2) {
        r.branch = "not-applicable";
        return r;
    }
    r.branch = "applies";

    auto over = [&](const LatticePolytope& p) {
        std::vector<RatVec> rv;
        rv.reserve(p.vertex_count());
        for (const IntVec& v : p.vertices()) rv.push_back(to_rat(v));
        return LatticePolytope(p.dim(), rebase(rv, refinement));
    };

    LatticePolytope P = over(lawrence_prism(heights));

    int l = 0;
    while (heights[l] == 0) ++l;
    std::vector<Int> rest = heights;
    rest[l] -= 1;
    LatticePolytope P2 = over(lawrence_prism(rest));

    std::vector<LatticePolytope> sections = section_simplices(heights, refinement);
    const LatticePolytope& slice = sections.front();

    std::vector<IntVec> shared(slice.vertices().begin(),
                               slice.vertices().end() - 1);
    LatticePolytope S = restrict_to_affine_hull(shared, d);

    for (int k = 1; k <= d + 1; ++k) {
        Int lhs = count_points(P, k);
        Int rhs = count_points(P2, k) + count_points(slice, k) - count_points(S, k);
        if (lhs != rhs) {
            r.passed = false;
            r.note("count-mismatch-at", static_cast<long long>(k));
            r.note("lhs", lhs);
            r.note("rhs", rhs);
            return r;
        }
    }

    HStarVector hP = hstar_auto(P);
    HStarVector hP2 = hstar_auto(P2);
    HStarVector hSlice = hstar_group(slice);
    HStarVector hS = hstar_auto(S);
    std::vector<Int> rhs = poly_sub(poly_add(hP2.coeffs(), hSlice.coeffs()),
                                    poly_mul_one_minus_t(hS.coeffs()));
    r.note("prism", hP.to_string());
    r.note("peeled", hP2.to_string());
    r.note("slice", hSlice.to_string());
    r.note("facet", hS.to_string());
    r.require(poly_eq(hP.coeffs(), rhs));
    return r;
}

IntMatrix random_hnf_matrix(int dim, long long max_volume, Rng& rng) {
    if (dim < 1 || max_volume < 1)
        throw std::invalid_argument("bad random simplex parameters");
    std::vector<long long> diag(dim, 1);
    long long budget = max_volume;
    for (int i = 0; i < dim; ++i) {
        long long v = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(budget));
        diag[i] = v;
        budget /= v;
        if (budget < 1) budget = 1;
    }
    std::shuffle(diag.begin(), diag.end(), rng);
    IntMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, i) = diag[i];
    for (int j = 1; j < dim; ++j)
        for (int i = 0; i < j; ++i)
            if (diag[j] > 1)
                m(i, j) = static_cast<long long>(rng() % static_cast<std::uint64_t>(diag[j]));
    return m;
}

AffineLattice random_refinement(int dim, int max_index, Rng& rng) {
    if (dim < 1 || max_index < 1)
        throw std::invalid_argument("bad refinement parameters");
    long long m = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(max_index));
    std::vector<RatVec> gens;
    for (int i = 0; i < dim; ++i) {
        RatVec e(dim, Rat(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    if (m > 1) {
        RatVec w(dim, Rat(0));
        for (int i = 0; i < dim; ++i)
            w[i] = Rat(static_cast<long long>(rng() % static_cast<std::uint64_t>(m)), m);
        gens.push_back(std::move(w));
    }
    return AffineLattice(RatVec(dim, Rat(0)), gens);
}

IntMatrix random_unimodular(int dim, int ops, Rng& rng) {
    IntMatrix m = IntMatrix::identity(dim);
    if (dim < 2) return m;
    for (int t = 0; t < ops; ++t) {
        int kind = static_cast<int>(rng() % 3);
        int i = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
        if (i == j) j = (j + 1) % dim;
        if (kind == 0) {
            m.swap_rows(i, j);
        } else if (kind == 1) {
            m.negate_row(i);
        } else {
            long long cmag = 1 + static_cast<long long>(rng() % 2);
            Int cc = (rng() % 2 == 0) ? Int(cmag) : Int(-cmag);
            m.add_row_multiple(i, j, cc);
        }
    }
    return m;
}

CheckReport verify_reference_values() {
    CheckReport r;
    r.name = "reference-values";

    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.passed = false;
            r.note("failed", what);
        }
    };

    // dilated triangle saturating the planar bound
    {
        LatticePolytope t(2, {{Int(0), Int(0)}, {Int(3), Int(0)}, {Int(0), Int(3)}});
        HStarVector hg = hstar_group(t);
        HStarVector hi = hstar_interp(t);
        expect(hg.coeffs() == std::vector<Int>({1, 7, 1}), "triangle h* by group");
        expect(hi.coeffs() == std::vector<Int>({1, 7, 1}), "triangle h* by counting");
        expect(count_points(t, 1) == 10, "triangle point count");
        expect(count_points(t, 2) == 28, "triangle double dilation count");
        expect(count_interior(t, 1) == 1, "triangle interior count");
        expect(scott_dim2(7, 1).passed, "triangle planar bound");
        expect(scott_dim2(7, 1).branch == "case-3", "triangle bound branch");
    }

    // five-dimensional simplex whose h* fails the universal bound shape
    {
        LatticePolytope p(5, {{Int(0), Int(0), Int(0), Int(0), Int(0)},
                              {Int(1), Int(0), Int(0), Int(0), Int(0)},
                              {Int(0), Int(1), Int(0), Int(0), Int(0)},
                              {Int(1), Int(1), Int(2), Int(0), Int(0)},
                              {Int(0), Int(0), Int(0), Int(1), Int(0)},
                              {Int(0), Int(0), Int(0), Int(1), Int(9)}});
        HStarVector hg = hstar_group(p);
        expect(hg.coeffs() == std::vector<Int>({1, 8, 1, 8, 0, 0}),
               "degree-3 witness h*");
        expect(hstar_interp(p).same_polynomial(hg), "witness engine agreement");
        expect(!scott_universal(8, 1).passed, "witness exceeds bound");
        CheckReport mt = main_theorem(p);
        expect(mt.passed && mt.branch == "hypothesis-unmet",
               "witness exempt from hypothesis");
    }

    // eight-dimensional half-lattice simplex
    {
        int d = 8;
        std::vector<RatVec> gens;
        for (int i = 0; i < d; ++i) {
            RatVec e(d, Rat(0));
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        gens.push_back(RatVec(d, Rat(1, 2)));
        AffineLattice N(RatVec(d, Rat(0)), gens);

        std::vector<RatVec> verts(d + 1, RatVec(d, Rat(0)));
        verts[1][0] = 3;
        verts[2][1] = 3;
        for (int i = 3; i <= d; ++i) verts[i][i - 1] = 1;
        LatticePolytope p(d, rebase(verts, N));

        LambdaGroup g = lambda_group(p);
        expect(g.order() == 18, "half-lattice group order");
        expect(g.invariant_factors == std::vector<Int>({3, 6}),
               "half-lattice invariant factors");

        HStarVector h = hstar_group(p);
        expect(h.coeffs() == std::vector<Int>({1, 7, 1, 0, 6, 3, 0, 0, 0}),
               "half-lattice h*");

        RatVec g1(d + 1, Rat(0)), g2(d + 1, Rat(0)), g3(d + 1, Rat(0));
        g1[0] = Rat(1, 3); g1[1] = Rat(2, 3);
        g2[0] = Rat(1, 3); g2[2] = Rat(2, 3);
        for (int i = 1; i <= d; ++i) g3[i] = Rat(1, 2);
        expect(g.contains(g1) && g.contains(g2) && g.contains(g3),
               "half-lattice generators present");

        std::set<RatVec> closure = {RatVec(d + 1, Rat(0))};
        std::deque<RatVec> queue = {RatVec(d + 1, Rat(0))};
        std::vector<RatVec> gensl = {g1, g2, g3};
        while (!queue.empty()) {
            RatVec cur = queue.front();
            queue.pop_front();
            for (const RatVec& gg : gensl) {
                RatVec nxt = LambdaGroup::add(cur, gg);
                if (closure.insert(nxt).second) queue.push_back(nxt);
            }
        }
        expect(closure.size() == 18, "generators span the group");

        SpanningResult sp = spanning(p);
        expect(sp.index == 2, "half-lattice spanning index");
        HStarVector hs = hstar_group(sp.polytope);
        expect(hs.coeffs() == std::vector<Int>({1, 7, 1, 0, 0, 0, 0, 0, 0}),
               "spanning h*");
        expect(spanning_gapless(hs).passed, "spanning h* gapless");
        expect(hs.at_or_zero(1) == h.at_or_zero(1), "spanning keeps h1");
        for (int i = 2; i <= d; ++i)
            expect(hs.at_or_zero(i) <= h.at_or_zero(i), "spanning bounded above");

        StripResult st = strip_pyramids(sp.polytope);
        expect(st.layers == 6, "spanning strips six layers");
        expect(st.base.dim() == 2, "spanning strips to a polygon");
        expect(hstar_auto(st.base).coeffs() == std::vector<Int>({1, 7, 1}),
               "stripped base saturates the planar bound");

        // h* does not factor as a product of two h*-like polynomials
        std::vector<Int> target = h.coeffs();
        while (!target.empty() && target.back() == 0) target.pop_back();
        bool factors = false;
        for (int df = 1; df <= 2 && !factors; ++df) {
            std::vector<Int> f(df + 1, Int(0));
            f[0] = 1;
            std::function<void(int)> walk = [&](int pos) {
                if (factors) return;
                if (pos > df) {
                    if (f[df] == 0) return;
                    // ascending exact division target / f
                    std::vector<Int> q(target.size() - df, Int(0));
                    std::vector<Int> remv = target;
                    bool ok = true;
                    for (std::size_t i = 0; i < q.size() && ok; ++i) {
                        q[i] = remv[i];
                        if (q[i] < 0) { ok = false; break; }
                        for (int j = 0; j <= df; ++j) remv[i + j] -= q[i] * f[j];
                    }
                    if (ok) {
                        for (const Int& x : remv)
                            if (x != 0) { ok = false; break; }
                    }
                    if (ok && !q.empty() && q[0] == 1) factors = true;
                    return;
                }
                for (Int v = 0; v <= target[pos]; ++v) {
                    f[pos] = v;
                    walk(pos + 1);
                }
            };
            walk(1);
        }
        expect(!factors, "half-lattice h* admits no join factorization");
    }

    // join of a height-concentrated simplex with a fat segment
    {
        Int a = 2, b = 3;
        LatticePolytope core = concentrated_simplex(2, b);
        LatticePolytope seg(1, {{Int(0)}, {a + 1}});
        HStarVector hj = hstar_group(join(core, seg));
        expect(hj.coeffs() == std::vector<Int>({1, a, b, a * b, 0, 0}),
               "join h* spot value");
    }

    return r;
}

} // namespace hstar
