#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hstar/ehrhart.hpp"
#include "hstar/harness.hpp"
#include "test_support.hpp"

using namespace hstar;
using namespace hstar::testutil;

namespace {

LatticePolytope simplex_from_rows(const IntMatrix& m) {
    int d = m.rows();
    std::vector<IntVec> verts;
    verts.push_back(IntVec(d, Int(0)));
    for (int i = 0; i < d; ++i) verts.push_back(m.row(i));
    return LatticePolytope(d, verts);
}

} // namespace

TEST_CASE("coefficient vector validation and accessors") {
    CHECK_THROWS_AS(HStarVector({}), std::invalid_argument);
    CHECK_THROWS_AS(HStarVector({Int(2), Int(1)}), NegativeCoefficient);
    CHECK_THROWS_AS(HStarVector({Int(1), Int(-1)}), NegativeCoefficient);

    HStarVector h({Int(1), Int(7), Int(1)});
    CHECK(h.poly_dim() == 2);
    CHECK(h.degree() == 2);
    CHECK(h.volume() == 9);
    CHECK(h.at_or_zero(5) == 0);
    CHECK(h.to_string() == "1 + 7 t + 1 t^2");

    HStarVector point({Int(1)});
    CHECK(point.degree() == 0);
    CHECK(point.to_string() == "1");

    HStarVector cube({Int(1), Int(4), Int(1), Int(0)});
    CHECK(cube.degree() == 2);
    CHECK(cube.same_polynomial(HStarVector({Int(1), Int(4), Int(1)})));
    CHECK_FALSE(cube.same_polynomial(HStarVector({Int(1), Int(4)})));
}

TEST_CASE("counting engine on golden polytopes") {
    CHECK(hstar_interp(make_poly(2, {{0, 0}, {3, 0}, {0, 3}})) ==
          HStarVector({Int(1), Int(7), Int(1)}));
    CHECK(hstar_interp(make_poly(2, {{0, 0}, {1, 0}, {0, 1}})) ==
          HStarVector({Int(1), Int(0), Int(0)}));
    CHECK(hstar_interp(make_poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})) ==
          HStarVector({Int(1), Int(1), Int(0)}));
    CHECK(hstar_interp(make_poly(1, {{0}, {5}})) == HStarVector({Int(1), Int(4)}));
    CHECK(hstar_interp(make_poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                     {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})) ==
          HStarVector({Int(1), Int(4), Int(1), Int(0)}));
    // Reeve simplex with a hollow middle: no interior points until the
    // second dilation
    CHECK(hstar_interp(make_poly(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}})) ==
          HStarVector({Int(1), Int(0), Int(1), Int(0)}));
}

TEST_CASE("group of the tripled triangle") {
    auto t = make_poly(2, {{0, 0}, {3, 0}, {0, 3}});
    auto g = lambda_group(t);
    CHECK(g.tuple_len == 3);
    CHECK(g.order() == 9);
    CHECK(g.invariant_factors == std::vector<Int>({Int(3), Int(3)}));

    RatVec e = rvec({{1, 3}, {1, 3}, {1, 3}});
    CHECK(g.contains(e));
    CHECK(g.height_of(e) == 1);
    CHECK_FALSE(g.contains(rvec({{1, 2}, {1, 2}, {0, 1}})));
    CHECK_THROWS_AS(g.height_of(rvec({{1, 2}, {1, 2}, {0, 1}})), PointNotInLattice);

    // histogram of heights is the h*-vector
    std::map<int, int> hist;
    for (int h : g.heights) hist[h]++;
    CHECK(hist[0] == 1);
    CHECK(hist[1] == 7);
    CHECK(hist[2] == 1);

    // closed under addition
    for (const auto& a : g.elements)
        for (const auto& b : g.elements) CHECK(g.contains(LambdaGroup::add(a, b)));

    // identity present with height zero
    CHECK(g.height_of(RatVec(3, Rat(0))) == 0);
}

TEST_CASE("group of a segment is cyclic") {
    auto g = lambda_group(make_poly(1, {{0}, {5}}));
    CHECK(g.order() == 5);
    CHECK(g.invariant_factors == std::vector<Int>({Int(5)}));
    std::map<int, int> hist;
    for (int h : g.heights) hist[h]++;
    CHECK(hist[0] == 1);
    CHECK(hist[1] == 4);
}

TEST_CASE("group engine rejects non-simplices") {
    auto sq = make_poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(lambda_group(sq), NotSimplex);
    CHECK_THROWS_AS(hstar_group(sq), NotSimplex);
    CHECK(hstar_auto(sq) == HStarVector({Int(1), Int(1), Int(0)}));
}

TEST_CASE("both engines agree on random simplices") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        int d = 2 + static_cast<int>(rng() % 3);
        auto p = simplex_from_rows(random_hnf_matrix(d, 24, rng));
        auto a = hstar_interp(p);
        auto b = hstar_group(p);
        CHECK(a == b);
        CHECK(a.volume() == lambda_group(p).order());
    }
}

TEST_CASE("group respects a finer ambient lattice") {
    // standard 2-simplex over the lattice generated by Z^2 and (1/2, 1/2)
    std::vector<RatVec> gens = {rvec({{1, 1}, {0, 1}}), rvec({{0, 1}, {1, 1}}),
                                rvec({{1, 2}, {1, 2}})};
    AffineLattice n(rvec({{0, 1}, {0, 1}}), gens);
    std::vector<RatVec> verts = {rvec({{0, 1}, {0, 1}}), rvec({{1, 1}, {0, 1}}),
                                 rvec({{0, 1}, {1, 1}})};
    LatticePolytope p(2, rebase(verts, n));
    auto g = lambda_group(p);
    CHECK(g.order() == 2);
    auto h = hstar_group(p);
    CHECK(h.volume() == 2);
    CHECK(h == hstar_interp(p));
}

TEST_CASE("identity checks accept honest vectors and flag tampered ones") {
    auto t = make_poly(2, {{0, 0}, {3, 0}, {0, 3}});
    auto ok = identity_checks(t, hstar_interp(t));
    CHECK(ok.passed);
    CHECK(ok.branch == "simplex-volume");

    auto bad = identity_checks(t, HStarVector({Int(1), Int(7), Int(0)}));
    CHECK_FALSE(bad.passed);
    CHECK_THROWS_AS(identity_checks(t, HStarVector({Int(1), Int(7), Int(0), Int(1)})),
                    DimensionMismatch);

    auto sq = make_poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto ok2 = identity_checks(sq, hstar_interp(sq));
    CHECK(ok2.passed);
    CHECK(ok2.branch == "sum-only");
    CHECK_FALSE(identity_checks(sq, HStarVector({Int(1), Int(0), Int(1)})).passed);
}

TEST_CASE("polynomial helpers") {
    using V = std::vector<Int>;
    V a = {Int(1), Int(2)};
    V b = {Int(0), Int(1), Int(3)};
    CHECK(poly_add(a, b) == V({Int(1), Int(3), Int(3)}));
    CHECK(poly_sub(b, a) == V({Int(-1), Int(-1), Int(3)}));
    CHECK(poly_mul(a, b) == V({Int(0), Int(1), Int(5), Int(6)}));
    CHECK(poly_mul_one_minus_t(a) == V({Int(1), Int(1), Int(-2)}));
    CHECK(poly_eq(V({Int(1), Int(0)}), V({Int(1)})));
    CHECK_FALSE(poly_eq(V({Int(1), Int(1)}), V({Int(1)})));
    CHECK(poly_eq(poly_mul(a, b), poly_mul(b, a)));
}

TEST_CASE("group elements are distinct, sorted, and fractional") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 20; ++iter) {
        int d = 2 + static_cast<int>(rng() % 2);
        auto p = simplex_from_rows(random_hnf_matrix(d, 12, rng));
        auto g = lambda_group(p);
        CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
        std::set<RatVec> s(g.elements.begin(), g.elements.end());
        CHECK(s.size() == g.elements.size());
        for (size_t i = 0; i < g.elements.size(); ++i) {
            Rat sum = 0;
            for (const auto& x : g.elements[i]) {
                CHECK(x >= 0);
                CHECK(x < 1);
                sum += x;
            }
            CHECK(is_integer(sum));
            CHECK(Rat(g.heights[i]) == sum);
            CHECK(g.heights[i] <= p.dim());
        }
        Int prod = 1;
        for (const auto& f : g.invariant_factors) {
            CHECK(f > 1);
            prod *= f;
        }
        CHECK(prod == g.order());
    }
}
