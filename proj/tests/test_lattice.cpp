#include <doctest.h>

#include <random>

#include "hstar/lattice.hpp"
#include "test_support.hpp"

using namespace hstar;
using namespace hstar::testutil;

namespace {

bool is_hnf_shape(const IntMatrix& h) {
    // pivots strictly move right, are positive, entries above them are
    // reduced, zero rows trail
    int prev_col = -1;
    bool seen_zero_row = false;
    for (int i = 0; i < h.rows(); ++i) {
        int pc = -1;
        for (int j = 0; j < h.cols(); ++j) {
            if (h(i, j) != 0) { pc = j; break; }
        }
        if (pc < 0) { seen_zero_row = true; continue; }
        if (seen_zero_row) return false;
        if (pc <= prev_col) return false;
        if (h(i, pc) <= 0) return false;
        for (int r = 0; r < i; ++r) {
            if (h(r, pc) < 0 || h(r, pc) >= h(i, pc)) return false;
        }
        prev_col = pc;
    }
    return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int span) {
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> dist(-span, span);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_CASE("hermite form of a small golden matrix") {
    auto r = hnf(imat({{1, 2}, {3, 4}}));
    CHECK(r.h == imat({{1, 0}, {0, 2}}));
    CHECK(mul(r.u, imat({{1, 2}, {3, 4}})) == r.h);
    Int du = det(r.u);
    CHECK((du == 1 || du == -1));
}

TEST_CASE("hermite form handles zero and rank-deficient input") {
    auto z = hnf(imat({{0, 0}, {0, 0}}));
    CHECK(z.h == imat({{0, 0}, {0, 0}}));

    auto r = hnf(imat({{2, 4}, {1, 2}, {3, 6}}));
    CHECK(r.h == imat({{1, 2}, {0, 0}, {0, 0}}));
    CHECK(mul(r.u, imat({{2, 4}, {1, 2}, {3, 6}})) == r.h);
}

TEST_CASE("hermite form is canonical and unimodular on random input") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; ++iter) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 5);
        IntMatrix m = random_matrix(rng, rows, cols, 20);
        auto r = hnf(m);
        CHECK(is_hnf_shape(r.h));
        CHECK(mul(r.u, m) == r.h);
        Int du = det(r.u);
        CHECK((du == 1 || du == -1));
        if (rows == cols) {
            Int dm = det(m);
            Int dh = det(r.h);
            CHECK((dh == dm || dh == -dm));
        }
        // canonical: row operations on the input do not change the form
        IntMatrix m2 = m;
        if (rows >= 2) {
            m2.add_row_multiple(0, rows - 1, Int(3));
            m2.swap_rows(0, rows - 1);
        } else {
            m2.negate_row(0);
        }
        CHECK(hnf(m2).h == r.h);
    }
}

TEST_CASE("smith form of a small golden matrix") {
    IntMatrix m = imat({{2, 4}, {6, 8}});
    auto r = snf(m);
    CHECK(r.d == imat({{2, 0}, {0, 4}}));
    CHECK(mul(mul(r.u, m), r.v) == r.d);
    Int du = det(r.u), dv = det(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
}

TEST_CASE("smith form invariants on random matrices") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 150; ++iter) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        IntMatrix m = random_matrix(rng, rows, cols, 15);
        auto r = snf(m);
        CHECK(mul(mul(r.u, m), r.v) == r.d);
        Int du = det(r.u), dv = det(r.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        int n = std::min(rows, cols);
        for (int i = 0; i < r.d.rows(); ++i)
            for (int j = 0; j < r.d.cols(); ++j)
                if (i != j) CHECK(r.d(i, j) == 0);
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(r.d(i, i) >= 0);
            if (r.d(i + 1, i + 1) != 0) {
                CHECK(r.d(i, i) != 0);
                CHECK(r.d(i + 1, i + 1) % r.d(i, i) == 0);
            }
        }
        if (rows == cols) {
            Int prod = 1;
            for (int i = 0; i < n; ++i) prod *= r.d(i, i);
            Int dm = det(m);
            CHECK((prod == dm || prod == -dm));
        }
    }
}

TEST_CASE("determinant and unimodular inverse") {
    CHECK(det(imat({{3}})) == 3);
    CHECK(det(imat({{1, 2}, {3, 4}})) == -2);
    CHECK(det(imat({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == 30);
    CHECK(det(IntMatrix(0, 0)) == 1);

    IntMatrix u = imat({{1, 2}, {1, 3}});
    IntMatrix inv = inverse_unimodular(u);
    CHECK(mul(u, inv) == IntMatrix::identity(2));
    CHECK(mul(inv, u) == IntMatrix::identity(2));
}

TEST_CASE("standard lattice membership and coordinates") {
    auto z3 = AffineLattice::standard(3);
    CHECK(z3.rank() == 3);
    CHECK(z3.denominator() == 1);
    CHECK(z3.contains(rvec({{1, 1}, {-2, 1}, {5, 1}})));
    CHECK_FALSE(z3.contains(rvec({{1, 2}, {0, 1}, {0, 1}})));
    auto c = z3.coords(rvec({{4, 1}, {0, 1}, {-7, 1}}));
    REQUIRE(c.has_value());
    CHECK(*c == ivec({4, 0, -7}));
    CHECK(z3.point_at(ivec({4, 0, -7})) == rvec({{4, 1}, {0, 1}, {-7, 1}}));
}

TEST_CASE("affine span of a planar point set") {
    std::vector<RatVec> pts = {
        rvec({{0, 1}, {0, 1}}),
        rvec({{3, 1}, {0, 1}}),
        rvec({{0, 1}, {3, 1}}),
        rvec({{1, 1}, {1, 1}}),
    };
    auto l = affine_span(pts);
    CHECK(l.rank() == 2);
    CHECK(lattice_index(l, AffineLattice::standard(2)) == 3);
    // members are exactly the points with x = y mod 3
    CHECK(l.contains(rvec({{2, 1}, {-1, 1}})));
    CHECK(l.contains(rvec({{4, 1}, {1, 1}})));
    CHECK_FALSE(l.contains(rvec({{1, 1}, {0, 1}})));
}

TEST_CASE("affine span with a nonzero base point") {
    std::vector<RatVec> pts = {
        rvec({{1, 1}, {0, 1}}),
        rvec({{1, 1}, {2, 1}}),
    };
    auto l = affine_span(pts);
    CHECK(l.rank() == 1);
    CHECK(l.contains(rvec({{1, 1}, {4, 1}})));
    CHECK(l.contains(rvec({{1, 1}, {-2, 1}})));
    CHECK_FALSE(l.contains(rvec({{1, 1}, {1, 1}})));
    CHECK_FALSE(l.contains(rvec({{0, 1}, {0, 1}})));
}

TEST_CASE("half integer lattice and index over the standard one") {
    int d = 8;
    RatVec w(d, Rat(1, 2));
    std::vector<RatVec> gens;
    for (int i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        gens.push_back(e);
    }
    gens.push_back(w);
    AffineLattice n(RatVec(d, Rat(0)), gens);
    CHECK(n.denominator() == 2);
    CHECK(lattice_index(AffineLattice::standard(d), n) == 2);

    RatVec p(d, Rat(3, 2));
    CHECK(n.contains(p));
    p[0] = Rat(1);
    CHECK_FALSE(n.contains(p));
}

TEST_CASE("equal lattices from different generating sets compare equal") {
    std::vector<RatVec> g1 = {rvec({{1, 2}, {1, 2}}), rvec({{0, 1}, {1, 1}})};
    std::vector<RatVec> g2 = {rvec({{1, 2}, {-1, 2}}), rvec({{7, 2}, {3, 2}}), rvec({{1, 1}, {0, 1}})};
    AffineLattice a(rvec({{0, 1}, {0, 1}}), g1);
    AffineLattice b(rvec({{1, 1}, {1, 1}}), g2); // base differs but lies in the lattice
    CHECK(a == b);

    AffineLattice c(rvec({{1, 2}, {0, 1}}), g1); // base shifted off the lattice
    CHECK_FALSE(a == c);
}

TEST_CASE("rebase round trip and failure modes") {
    std::vector<RatVec> gens = {rvec({{1, 1}, {1, 1}}), rvec({{0, 1}, {3, 1}})};
    AffineLattice l(rvec({{0, 1}, {0, 1}}), gens);

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        IntVec z = ivec({static_cast<long long>(rng() % 41) - 20,
                         static_cast<long long>(rng() % 41) - 20});
        RatVec p = l.point_at(z);
        auto back = rebase({p}, l);
        REQUIRE(back.size() == 1);
        CHECK(back[0] == z);
        CHECK(l.point_at(back[0]) == p);
    }

    CHECK_THROWS_AS(rebase({rvec({{1, 1}, {0, 1}})}, l), PointNotInLattice);
    CHECK(lattice_index(l, AffineLattice::standard(2)) == 3);
    CHECK_THROWS_AS(lattice_index(AffineLattice::standard(2), l), NotSublattice);
}

TEST_CASE("lattice index is multiplicative along a chain") {
    auto z2 = AffineLattice::standard(2);
    std::vector<RatVec> g_mid = {rvec({{1, 1}, {0, 1}}), rvec({{0, 1}, {2, 1}})};
    AffineLattice mid(rvec({{0, 1}, {0, 1}}), g_mid);
    std::vector<RatVec> g_sub = {rvec({{3, 1}, {0, 1}}), rvec({{0, 1}, {2, 1}})};
    AffineLattice sub(rvec({{0, 1}, {0, 1}}), g_sub);

    CHECK(lattice_index(mid, z2) == 2);
    CHECK(lattice_index(sub, mid) == 3);
    CHECK(lattice_index(sub, z2) == 6);
}
