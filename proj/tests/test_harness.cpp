#include <doctest.h>

#include <set>

#include "hstar/harness.hpp"
#include "test_support.hpp"

using namespace hstar;
using namespace hstar::testutil;

namespace {

std::vector<IntMatrix> collect(const EnumSpec& spec) {
    std::vector<IntMatrix> out;
    enumerate_simplices(spec, [&](const IntMatrix& m) { out.push_back(m); });
    return out;
}

std::vector<std::vector<long long>> flatten(const std::vector<IntMatrix>& ms) {
    std::vector<std::vector<long long>> out;
    for (const auto& m : ms) {
        std::vector<long long> f;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) f.push_back(m(i, j).convert_to<long long>());
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

TEST_CASE("enumeration in dimension one lists the volumes") {
    EnumSpec s;
    s.dim = 1;
    s.max_volume = 5;
    auto ms = collect(s);
    REQUIRE(ms.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(ms[i](0, 0) == i + 1);
}

TEST_CASE("enumeration in dimension two matches the divisor-sum count") {
    // the number of forms with determinant n is sigma(n), so the running
    // total for max volume 2 and 4 is 4 and 15
    EnumSpec s;
    s.dim = 2;
    s.max_volume = 2;
    CHECK(collect(s).size() == 4);
    s.max_volume = 4;
    auto ms = collect(s);
    CHECK(ms.size() == 15);
    std::set<std::vector<long long>> seen;
    for (auto& f : flatten(ms)) seen.insert(f);
    CHECK(seen.size() == ms.size()); // no duplicates
    for (const auto& m : ms) {
        CHECK(m(1, 0) == 0);
        CHECK(m(0, 0) >= 1);
        CHECK(m(1, 1) >= 1);
        CHECK(m(0, 1) >= 0);
        CHECK(m(0, 1) < m(1, 1));
        CHECK(m(0, 0) * m(1, 1) <= 4);
    }
}

TEST_CASE("every enumerated matrix yields a valid simplex of its volume") {
    EnumSpec s;
    s.dim = 3;
    s.max_volume = 4;
    auto ms = collect(s);
    for (const auto& m : ms) {
        auto p = hnf_simplex(m);
        CHECK(p.dim() == 3);
        CHECK(is_simplex(p));
        Int d = m(0, 0) * m(1, 1) * m(2, 2);
        CHECK(hstar_group(p).volume() == d);
    }
}

TEST_CASE("shards partition the enumeration") {
    EnumSpec full;
    full.dim = 2;
    full.max_volume = 6;
    auto all = flatten(collect(full));

    std::vector<std::vector<long long>> merged;
    for (int i = 0; i < 3; ++i) {
        EnumSpec s = full;
        s.shard_index = i;
        s.shard_total = 3;
        auto part = flatten(collect(s));
        merged.insert(merged.end(), part.begin(), part.end());
    }
    CHECK(merged.size() == all.size());
    std::sort(merged.begin(), merged.end());
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    CHECK(merged == sorted);
}

TEST_CASE("enumeration rejects bad parameters") {
    EnumSpec s;
    s.dim = 0;
    CHECK_THROWS(enumerate_simplices(s, [](const IntMatrix&) {}));
    s.dim = 2;
    s.shard_index = 3;
    s.shard_total = 3;
    CHECK_THROWS(enumerate_simplices(s, [](const IntMatrix&) {}));
}

TEST_CASE("sweep over all planar simplices up to volume eight") {
    EnumSpec s;
    s.dim = 2;
    s.max_volume = 8;
    auto r = sweep_main_theorem(s);
    // running total of sigma(n) for n = 1..8
    CHECK(r.total == 56);
    CHECK(r.h3_zero == r.total); // no third coefficient in the plane
    CHECK(r.scott_pass == r.h3_zero);
    CHECK(r.violations.empty());
    CHECK(r.inequality_failures == 0);
    CHECK(r.inequality_witnesses.empty());
}

TEST_CASE("parallel sweep agrees with the single-threaded one") {
    EnumSpec s;
    s.dim = 3;
    s.max_volume = 6;
    auto a = sweep_main_theorem(s);
    auto b = sweep_parallel(3, Int(6), 3);
    CHECK(a.total == b.total);
    CHECK(a.h3_zero == b.h3_zero);
    CHECK(a.scott_pass == b.scott_pass);
    CHECK(a.inequality_failures == b.inequality_failures);
    CHECK(a.violations.size() == b.violations.size());
    CHECK(a.total > 0);
    CHECK(b.violations.empty());
}

TEST_CASE("tuple maps on a hand checked configuration") {
    // d = 2, k = 1, heights c = (0, 2)
    std::vector<Int> c = {Int(0), Int(2)};
    RatVec r = rvec({{1, 3}, {1, 3}, {1, 3}});
    auto image = pi_map(r, 1, c);
    REQUIRE(image.size() == 3);
    // slots other than k and the last one stay fixed
    CHECK(image[0] == Rat(1, 3));
    // C = r_0 c_0 + r_1 c_1 = 2/3; slot k: {C + r_2 (c_1 - 1)} = {2/3 + 1/3}
    CHECK(image[1] == Rat(0));
    // last slot: {r_1 - r_2 (c_1 - 2) - C} = {1/3 - 0 - 2/3}
    CHECK(image[2] == Rat(2, 3));
    auto back = pi_inv(image, 1, c);
    CHECK(back == r);

    auto s = psi_map(r, 1);
    // slot 0 gains r_d, slot k loses it
    CHECK(s[0] == Rat(2, 3));
    CHECK(s[1] == Rat(0));
    CHECK(s[2] == Rat(1, 3));
    CHECK(psi_inv(s, 1) == r);

    // k = 0 keeps the tuple fixed
    CHECK(psi_map(r, 0) == r);
    CHECK(psi_inv(r, 0) == r);
}

TEST_CASE("tuple maps validate dimensions") {
    std::vector<Int> c = {Int(1), Int(1)};
    CHECK_THROWS_AS(pi_map(rvec({{0, 1}, {0, 1}}), 0, c), DimensionMismatch);
    CHECK_THROWS_AS(pi_map(rvec({{0, 1}, {0, 1}, {0, 1}}), 2, c), DimensionMismatch);
    CHECK_THROWS_AS(psi_map(rvec({{0, 1}, {0, 1}, {0, 1}}), -1), DimensionMismatch);
}

TEST_CASE("slice simplices of one configuration") {
    SliceInstance inst;
    inst.d = 2;
    inst.k = 1;
    inst.c = {Int(0), Int(2)};
    inst.refinement = AffineLattice::standard(2);
    auto plain = slice_simplex_plain(inst);
    auto shifted = slice_simplex_shifted(inst);
    auto standard = slice_simplex_standard(inst);
    CHECK(plain.dim() == 2);
    CHECK(shifted.dim() == 2);
    CHECK(standard.dim() == 2);
    CHECK(is_simplex(plain));
    CHECK(is_simplex(shifted));
    CHECK(is_simplex(standard));
    // all three share the group order (same volume over the same lattice)
    auto g1 = lambda_group(plain);
    auto g2 = lambda_group(shifted);
    auto g3 = lambda_group(standard);
    CHECK(g1.order() == g2.order());
    CHECK(g1.order() == g3.order());
}

TEST_CASE("slice map verification on random instances") {
    auto r = verify_slice_maps(40, 20250816u);
    CHECK(r.passed);
    bool saw_layer2 = false;
    for (const auto& w : r.witnesses)
        if (w.first == "layer2-cases" && w.second != "0") saw_layer2 = true;
    CHECK(saw_layer2);
}

TEST_CASE("peeling identities for stacked prisms") {
    CHECK(verify_inclusion_exclusion({Int(2), Int(1)}, AffineLattice::standard(2)).passed);
    CHECK(verify_inclusion_exclusion({Int(3), Int(0), Int(2)}, AffineLattice::standard(3)).passed);

    std::vector<RatVec> gens = {rvec({{1, 1}, {0, 1}, {0, 1}}),
                                rvec({{0, 1}, {1, 1}, {0, 1}}),
                                rvec({{0, 1}, {0, 1}, {1, 1}}),
                                rvec({{1, 2}, {1, 2}, {1, 2}})};
    AffineLattice n(RatVec(3, Rat(0)), gens);
    CHECK(verify_inclusion_exclusion({Int(3), Int(0), Int(0)}, n).passed);

    auto na = verify_inclusion_exclusion({Int(1)}, AffineLattice::standard(1));
    CHECK(na.passed);
    CHECK(na.branch == "not-applicable");
}

TEST_CASE("reference configurations hold their frozen values") {
    auto r = verify_reference_values();
    for (const auto& w : r.witnesses) {
        CAPTURE(w.first);
        CAPTURE(w.second);
    }
    CHECK(r.passed);
}

TEST_CASE("random generators produce what they claim") {
    Rng rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        int d = 1 + static_cast<int>(rng() % 5);
        auto m = random_hnf_matrix(d, 30, rng);
        Int dd = 1;
        for (int i = 0; i < d; ++i) {
            CHECK(m(i, i) >= 1);
            dd *= m(i, i);
            for (int j = 0; j < i; ++j) CHECK(m(i, j) == 0);
            for (int j = i + 1; j < d; ++j) {
                CHECK(m(i, j) >= 0);
                CHECK(m(i, j) < m(j, j));
            }
        }
        CHECK(dd >= 1);
        CHECK(dd <= 30);
        CHECK(det(m) == dd);

        auto u = random_unimodular(d, 10, rng);
        Int du = det(u);
        CHECK((du == 1 || du == -1));

        auto n = random_refinement(d, 6, rng);
        CHECK(n.rank() == d);
        Int idx = lattice_index(AffineLattice::standard(d), n);
        CHECK(idx >= 1);
        CHECK(idx <= 6);
        for (int i = 0; i < d; ++i) {
            RatVec e(d, Rat(0));
            e[i] = 1;
            CHECK(n.linear_coords(e).has_value());
        }
    }
}
