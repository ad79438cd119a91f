#include "toricvol/valuation.hpp"

namespace toricvol {

void check_flag(const Fan2D& fan, const TFlag& flag) {
    if (flag.ray >= fan.ray_count() || flag.cone >= fan.cone_count() || !fan.cone_contains_ray(flag.cone, flag.ray))
        throw InvalidArgument("invalid flag: ray " + std::to_string(flag.ray) + " is not a face of cone " +
                              std::to_string(flag.cone));
}

std::vector<TFlag> enumerate_tflags(const Fan2D& fan) {
    std::vector<TFlag> flags;
    flags.reserve(2 * fan.cone_count());
    for (std::size_t j = 0; j < fan.cone_count(); ++j) {
        flags.push_back({j, j});
        flags.push_back({fan.next(j), j});
    }
    return flags;
}

Rank2Valuation flag_valuation(const Fan2D& fan, const TFlag& flag) {
    check_flag(fan, flag);
    const auto [a, b] = fan.cone_rays(flag.cone);
    const std::size_t other = flag.ray == a ? b : a;
    return {fan.ray(flag.ray), fan.ray(other)};
}

ValuationVector value(const Rank2Valuation& w, const Monomial& m) {
    return {pairing(m.exponent, w.first_ray), pairing(m.exponent, w.second_ray)};
}

Polygon trivialization_polytope(const Fan2D& fan, const TorusDivisor& d, const TFlag& flag) {
    if (!is_ample(fan, d)) throw NotAmple("trivialization polytope requires an ample divisor");
    const auto w = flag_valuation(fan, flag);
    const auto h = cartier_data(fan, d);
    std::vector<LatticeVector> pts;
    pts.reserve(h.size());
    for (const auto& mono : h.local_equations) pts.push_back(value(w, mono).as_vector());
    return convex_hull_2d(pts);
}

std::set<SemigroupElement> graded_semigroup(const Fan2D& fan, const TorusDivisor& d, const TFlag& flag,
                                            unsigned max_level) {
    const auto w = flag_valuation(fan, flag);
    std::set<SemigroupElement> out;
    for (unsigned m = 0; m <= max_level; ++m) {
        for (const auto& s : section_lattice_points(fan, d, m)) out.insert({value(w, s), m});
    }
    return out;
}

Polygon normalized_level_hull(const std::set<SemigroupElement>& semigroup, unsigned level) {
    if (level == 0) throw InvalidArgument("normalized_level_hull: level must be positive");
    std::vector<LatticeVector> pts;
    for (const auto& e : semigroup)
        if (e.level == level) pts.push_back(e.value.as_vector());
    return convex_hull_2d(pts).scaled(Rational(1, level));
}

}  // namespace toricvol
