#include "generators.hpp"
#include "toricvol/valuation.hpp"

#include <doctest.h>

#include <random>

using namespace toricvol;

TEST_CASE("flag valuations of F_l") {
    for (int l = 1; l <= 4; ++l) {
        const auto fan = hirzebruch_fan(l);
        const auto w = flag_valuation(fan, {2, 1});  // X > V(s3) > V(u2)
        CHECK(w.first_ray == LatticeVector{-1, l});
        CHECK(w.second_ray == LatticeVector{0, 1});
        const auto w5 = flag_valuation(fan, {3, 2});  // X > V(s5) > V(u4)
        CHECK(w5.first_ray == LatticeVector{0, -1});
        CHECK(w5.second_ray == LatticeVector{-1, l});
    }
    const auto p2 = flag_valuation(projective_plane_fan(), {0, 0});
    CHECK(p2.first_ray == LatticeVector{1, 0});
    CHECK(p2.second_ray == LatticeVector{0, 1});
    CHECK_THROWS_AS(flag_valuation(hirzebruch_fan(1), {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(flag_valuation(hirzebruch_fan(1), {7, 0}), InvalidArgument);
}

TEST_CASE("valuation vectors of the local equations") {
    for (int l = 1; l <= 4; ++l) {
        for (int a = 1; a <= 5; ++a) {
            for (int b = l * a + 1; b <= l * a + 5; ++b) {
                const auto w = flag_valuation(hirzebruch_fan(l), {2, 1});
                CHECK(value(w, {{b, 0}}) == ValuationVector{-b, 0});
                CHECK(value(w, {{b - l * a, -a}}) == ValuationVector{-b, -a});
                CHECK(value(w, {{0, -a}}) == ValuationVector{-l * a, -a});
                const auto w5 = flag_valuation(hirzebruch_fan(l), {3, 2});
                CHECK(value(w5, {{0, -a}}) == ValuationVector{a, -l * a});
                CHECK(value(w5, {{b, 0}}) == ValuationVector{0, -b});
            }
        }
    }
}

TEST_CASE("valuation agrees with the iterative definition in chart coordinates") {
    // Divide out the largest power of the flag uniformizer, then read off the
    // order of the remaining unit in the other chart coordinate.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto fan = gen::random_fan(rng, 4);
        for (const auto& flag : enumerate_tflags(fan)) {
            const auto w = flag_valuation(fan, flag);
            const auto [pi, t] = w.uniformizers();
            const Monomial m{gen::random_vector(rng, 10)};
            // Solve m = k1 * pi + k2 * t.
            const Integer det = cross(pi, t);
            const Integer k1 = cross(m.exponent, t) / det;
            const Integer k2 = cross(pi, m.exponent) / det;
            CHECK(k1 * pi + k2 * t == m.exponent);
            CHECK(value(w, m) == ValuationVector{k1, k2});
        }
    }
}

TEST_CASE("value is a monoid homomorphism with unimodular linear part") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fan = gen::random_fan(rng, 5);
        for (const auto& flag : enumerate_tflags(fan)) {
            const auto w = flag_valuation(fan, flag);
            const Monomial p{gen::random_vector(rng, 10)}, q{gen::random_vector(rng, 10)};
            const auto vp = value(w, p), vq = value(w, q), vpq = value(w, p * q);
            CHECK(vpq.first == vp.first + vq.first);
            CHECK(vpq.second == vp.second + vq.second);
            const auto e1 = value(w, {{1, 0}}), e2 = value(w, {{0, 1}});
            CHECK(abs(det_n({{e1.first, e2.first}, {e1.second, e2.second}})) == 1);
        }
    }
}

TEST_CASE("enumerate_tflags") {
    CHECK(enumerate_tflags(hirzebruch_fan(1)).size() == 8);
    CHECK(enumerate_tflags(projective_plane_fan()).size() == 6);
    CHECK(enumerate_tflags(star_subdivide(projective_plane_fan(), 1)).size() == 8);
    for (const auto& f : enumerate_tflags(hirzebruch_fan(2))) CHECK_NOTHROW(check_flag(hirzebruch_fan(2), f));
}

TEST_CASE("trivialization polytope") {
    const auto f1 = hirzebruch_fan(1);
    const auto d = hirzebruch_divisor(1, 2);
    const auto t1 = trivialization_polytope(f1, d, {1, 0});
    CHECK(t1 == Polygon({{-1, 0}, {0, 0}, {0, 2}, {-1, 1}}));
    CHECK(t1.area() == Rational(3, 2));
    const auto t3 = trivialization_polytope(f1, d, {2, 1});
    CHECK(t3.area() == Rational(3, 2));
    CHECK_FALSE(t3 == t1);
    CHECK_THROWS_AS(trivialization_polytope(f1, hirzebruch_divisor(1, 1), {0, 0}), NotAmple);
    CHECK_THROWS_AS(trivialization_polytope(f1, TorusDivisor::zero(f1), {0, 0}), NotAmple);
}

TEST_CASE("trivialization area is the same for every flag") {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 40) {
        const auto fan = gen::random_fan(rng, 5);
        const auto d = gen::random_ample_divisor(rng, fan, 6);
        if (!d) continue;
        ++checked;
        const auto area = divisor_polytope(fan, *d).area();
        for (const auto& flag : enumerate_tflags(fan)) CHECK(trivialization_polytope(fan, *d, flag).area() == area);
    }
}

TEST_CASE("graded semigroup") {
    const auto f1 = hirzebruch_fan(1);
    const auto d = hirzebruch_divisor(1, 2);
    const auto level0 = graded_semigroup(f1, d, {1, 0}, 0);
    CHECK(level0 == std::set<SemigroupElement>{{{0, 0}, 0}});

    const auto g1 = graded_semigroup(f1, d, {1, 0}, 1);
    CHECK(g1.size() == 6);
    std::set<ValuationVector> level1;
    for (const auto& e : g1)
        if (e.level == 1) level1.insert(e.value);
    // Images of (0,0),(1,0),(2,0),(0,-1),(1,-1) under (e.y, e.x).
    CHECK(level1 == std::set<ValuationVector>{{0, 0}, {0, 1}, {0, 2}, {-1, 0}, {-1, 1}});
    CHECK(normalized_level_hull(g1, 1) == trivialization_polytope(f1, d, {1, 0}));

    const auto g5 = graded_semigroup(f1, d, {2, 1}, 5);
    for (unsigned m = 1; m <= 5; ++m) CHECK(normalized_level_hull(g5, m) == trivialization_polytope(f1, d, {2, 1}));
    CHECK_THROWS_AS(normalized_level_hull(g5, 0), InvalidArgument);
}
