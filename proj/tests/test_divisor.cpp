#include "generators.hpp"
#include "oracles.hpp"
#include "toricvol/divisor.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace toricvol;

namespace {

std::vector<LatticeVector> exps(const CartierCocycle& h) {
    std::vector<LatticeVector> out;
    for (const auto& m : h.local_equations) out.push_back(m.exponent);
    return out;
}

}  // namespace

TEST_CASE("Cartier data of the Hirzebruch divisors") {
    for (int l = 1; l <= 4; ++l) {
        for (int a = -3; a <= 5; ++a) {
            for (int b = -3; b <= 9; ++b) {
                const auto h = cartier_data(hirzebruch_fan(l), hirzebruch_divisor(a, b));
                // h0 = y^-a, h2 = x^{b-la} y^-a, h4 = x^b, h6 = 1
                CHECK(exps(h) == std::vector<LatticeVector>{{0, -a}, {b - l * a, -a}, {b, 0}, {0, 0}});
            }
        }
    }
    const auto f1 = hirzebruch_fan(1);
    CHECK(exps(cartier_data(f1, hirzebruch_divisor(1, 2))) == std::vector<LatticeVector>{{0, -1}, {1, -1}, {2, 0}, {0, 0}});
    for (const auto& m : cartier_data(f1, TorusDivisor::zero(f1)).local_equations) CHECK(m.is_one());
    CHECK_THROWS_AS(cartier_data(f1, TorusDivisor({1, 2})), InvalidArgument);
}

TEST_CASE("Cartier data satisfy both pairings on random fans") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-7, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fan = gen::random_fan(rng, 5);
        TorusDivisor d;
        for (std::size_t i = 0; i < fan.ray_count(); ++i) d.coeffs.emplace_back(c(rng));
        const auto h = cartier_data(fan, d);
        for (std::size_t j = 0; j < fan.cone_count(); ++j) {
            CHECK(pairing(h[j].exponent, fan.ray(j)) == -d.coeffs[j]);
            CHECK(pairing(h[j].exponent, fan.ray(fan.next(j))) == -d.coeffs[fan.next(j)]);
        }
        // Cocycle condition and inverses.
        for (std::size_t a = 0; a < h.size(); ++a) {
            CHECK(cech_cocycle(h, a, a).is_one());
            for (std::size_t b = 0; b < h.size(); ++b) {
                CHECK((cech_cocycle(h, a, b) * cech_cocycle(h, b, a)).is_one());
                for (std::size_t g = 0; g < h.size(); ++g)
                    CHECK(cech_cocycle(h, a, b) * cech_cocycle(h, b, g) == cech_cocycle(h, a, g));
            }
        }
    }
}

TEST_CASE("Cech transition monomials of F_l") {
    const int l = 2, a = 3, b = 8;
    const auto h = cartier_data(hirzebruch_fan(l), hirzebruch_divisor(a, b));
    // f_{04} = h4/h0 = x^b y^a, f_{42} = h2/h4 = x^{-la} y^{-a} in odd/even labels.
    CHECK(cech_cocycle(h, 0, 2).exponent == LatticeVector{b, a});
    CHECK(cech_cocycle(h, 2, 1).exponent == LatticeVector{-l * a, -a});
}

TEST_CASE("ampleness of the Hirzebruch divisors matches a > 0 and b - la > 0") {
    for (int l = 1; l <= 4; ++l) {
        const auto fan = hirzebruch_fan(l);
        for (int a = -3; a <= 5; ++a) {
            for (int b = -3; b <= 20; ++b) {
                const auto d = hirzebruch_divisor(a, b);
                const bool expected = a > 0 && b - l * a > 0;
                CHECK(is_ample(fan, d) == expected);
                if (is_ample(fan, d)) CHECK(is_globally_generated(fan, d).generated);
                // Nef iff a >= 0 and b - la >= 0 (the closure of the ample cone).
                CHECK(is_globally_generated(fan, d).generated == (a >= 0 && b - l * a >= 0));
            }
        }
    }
    const auto f1 = hirzebruch_fan(1);
    CHECK_FALSE(is_ample(f1, hirzebruch_divisor(1, 1)));
    CHECK_FALSE(is_ample(f1, hirzebruch_divisor(0, 1)));
    const auto amp = ampleness(f1, hirzebruch_divisor(1, 1));
    REQUIRE_FALSE(amp.violations.empty());
    CHECK(amp.violations.front().slack == 0);
}

TEST_CASE("global generation witnesses") {
    const auto f1 = hirzebruch_fan(1);
    CHECK(is_globally_generated(f1, hirzebruch_divisor(1, 2)).generated);
    CHECK(is_globally_generated(f1, TorusDivisor::zero(f1)).generated);
    const auto gg = is_globally_generated(f1, hirzebruch_divisor(1, 0));
    CHECK_FALSE(gg.generated);
    // h2 = x^-1 y^-1 violates the inequality of s7 = ray0.
    bool found = false;
    for (const auto& w : gg.violations) found = found || (w.cone == 1 && w.ray == 0 && w.slack == -1);
    CHECK(found);
}

TEST_CASE("divisor polytope") {
    const auto f1 = hirzebruch_fan(1);
    const auto pd = divisor_polytope(f1, hirzebruch_divisor(1, 2));
    CHECK(pd == Polygon({{0, 0}, {0, -1}, {1, -1}, {2, 0}}));
    CHECK(pd.area() == Rational(3, 2));

    const auto zero = divisor_polytope(f1, TorusDivisor::zero(f1));
    CHECK(zero.vertices().size() == 1);
    CHECK(zero.area() == 0);

    CHECK(divisor_polytope(hirzebruch_fan(2), hirzebruch_divisor(1, 3)).area() == 2);
    CHECK_THROWS_AS(divisor_polytope(f1, hirzebruch_divisor(1, 0)), NotGloballyGenerated);
}

TEST_CASE("divisor polytope equals the half-plane intersection") {
    std::mt19937_64 rng(33);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 100; ++trial) {
        const auto fan = gen::random_fan(rng, 5);
        TorusDivisor d;
        std::uniform_int_distribution<int> c(-6, 6);
        for (std::size_t i = 0; i < fan.ray_count(); ++i) d.coeffs.emplace_back(c(rng));
        if (!is_globally_generated(fan, d).generated) continue;
        ++checked;
        const auto expected = oracle::halfplane_polytope(fan.rays(), d.coeffs);
        const auto pd = divisor_polytope(fan, d);
        CHECK(pd == Polygon(expected));
    }
    CHECK(checked > 20);
}

TEST_CASE("section lattice points") {
    const auto f1 = hirzebruch_fan(1);
    const auto d = hirzebruch_divisor(1, 2);
    const auto pts = section_lattice_points(f1, d, 1);
    std::set<LatticeVector> got;
    for (const auto& m : pts) got.insert(m.exponent);
    CHECK(got == std::set<LatticeVector>{{0, 0}, {1, 0}, {2, 0}, {0, -1}, {1, -1}});

    for (unsigned m = 0; m <= 3; ++m) {
        const auto z = section_lattice_points(f1, TorusDivisor::zero(f1), m);
        REQUIRE(z.size() == 1);
        CHECK(z.front().is_one());
    }

    // Pick: 2 P_D has area 6 and 10 boundary points.
    CHECK(oracle::pick_count({{0, 0}, {0, -2}, {2, -2}, {4, 0}}) == 12);
    CHECK(section_lattice_points(f1, d, 2).size() == 12);
}

TEST_CASE("lattice point counts agree with Pick's theorem") {
    std::mt19937_64 rng(44);
    int checked = 0;
    while (checked < 60) {
        const auto fan = gen::random_fan(rng, 4);
        auto d = gen::random_ample_divisor(rng, fan, 6);
        if (!d) continue;
        ++checked;
        const auto pd = divisor_polytope(fan, *d);
        for (unsigned m = 1; m <= 3; ++m) {
            std::vector<LatticeVector> verts;
            for (const auto& v : pd.vertices())
                verts.emplace_back(Integer(numerator(v.x)) * m, Integer(numerator(v.y)) * m);
            CHECK(Integer(section_lattice_points(fan, *d, m).size()) == oracle::pick_count(verts));
        }
    }
}

TEST_CASE("scaled hull of sections recovers the divisor polytope") {
    std::mt19937_64 rng(55);
    int checked = 0;
    while (checked < 30) {
        const auto fan = gen::random_fan(rng, 3);
        auto d = gen::random_ample_divisor(rng, fan, 5);
        if (!d) continue;
        ++checked;
        const auto pd = divisor_polytope(fan, *d);
        for (unsigned m = 1; m <= 5; ++m) {
            std::vector<LatticeVector> pts;
            for (const auto& s : section_lattice_points(fan, *d, m)) pts.push_back(s.exponent);
            CHECK(convex_hull_2d(pts).scaled(Rational(1, m)) == pd);
        }
    }
}
