#include "toricvol/volume.hpp"

namespace toricvol {

namespace {

void require_ample(const Fan2D& fan, const TorusDivisor& d) {
    const auto a = ampleness(fan, d);
    if (a.ample) return;
    const auto& w = a.violations.front();
    throw NotAmple("divisor is not ample: cone " + std::to_string(w.cone) + ", ray " + std::to_string(w.ray) +
                   " has slack " + w.slack.str() + " (must be positive)");
}

}  // namespace

FlagContribution flag_contribution(const Fan2D& fan, const TorusDivisor& d, const TFlag& flag,
                                   const OrbitDecomposition& dec) {
    require_ample(fan, d);
    const auto h = cartier_data(fan, d);
    const auto chart = flag_chart(fan, flag);

    FlagContribution out;
    out.flag = flag;
    out.owners = {dec.owner_of_generic(), dec.owner_of_ray(flag.ray), dec.owner_of_cone(flag.cone)};
    out.subtotal = 0;
    for (unsigned c = 0; c < 3; ++c) {
        SimplexTerm term;
        term.flag = flag;
        term.omitted = c;
        std::size_t col = 0;
        std::vector<std::vector<Integer>> columns;
        for (unsigned m = 0; m < 3; ++m) {
            if (m == c) continue;
            const auto v = value(chart.valuation, h[out.owners[m]]);
            term.sections[col] = out.owners[m];
            term.matrix[0][col] = v.first;
            term.matrix[1][col] = v.second;
            columns.push_back({v.first, v.second});
            ++col;
        }
        term.signed_volume = signed_simplex_volume(columns);
        if (c % 2 == 1) term.signed_volume = -term.signed_volume;
        out.subtotal += term.residue_degree * term.signed_volume;
        out.terms.push_back(std::move(term));
    }
    out.symbol_boundary = iterated_boundary(chart, flag_cocycle_symbol(h, dec, flag));
    return out;
}

Rational simplex_sum_volume(const Fan2D& fan, const TorusDivisor& d, const OrbitDecomposition& dec) {
    Rational total = 0;
    for (const auto& flag : enumerate_tflags(fan)) total += flag_contribution(fan, d, flag, dec).subtotal;
    return total;
}

Integer ray_self_intersection(const Fan2D& fan, std::size_t ray) {
    // ray_{i-1} + ray_{i+1} = a * ray_i with cross(ray_{i-1}, ray_i) = 1 gives a = cross(ray_{i-1}, ray_{i+1}).
    return -cross(fan.ray(fan.prev(ray)), fan.ray(fan.next(ray)));
}

Integer self_intersection_classical(const Fan2D& fan, const TorusDivisor& d) {
    check_divisor(fan, d);
    Integer total = 0;
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
        total += d.coeffs[i] * d.coeffs[i] * ray_self_intersection(fan, i);
        total += 2 * d.coeffs[i] * d.coeffs[fan.next(i)];
    }
    return total;
}

std::size_t VolumeReport::contributing_flag_count() const {
    std::size_t n = 0;
    for (const auto& f : per_flag) n += f.subtotal != 0;
    return n;
}

VolumeReport okounkov_volume_report(const Fan2D& fan, const TorusDivisor& d, const DecompositionVariant& variant,
                                    const TFlag& display_flag) {
    check_divisor(fan, d);
    check_flag(fan, display_flag);
    const auto dec = standard_decomposition(fan, variant);

    VolumeReport r;
    r.display_flag = display_flag;
    r.decomposition = variant.tag();
    const auto amp = ampleness(fan, d);
    r.ample = amp.ample;
    if (!r.ample) {
        for (const auto& w : amp.violations)
            r.diagnostics.push_back("cone " + std::to_string(w.cone) + ", ray " + std::to_string(w.ray) +
                                    ": <h, ray> + d = " + w.slack.str() + " (must be positive)");
        return r;
    }

    r.polytope = divisor_polytope(fan, d);
    r.area_polytope = polygon_area(r.polytope);
    r.self_intersection = self_intersection_classical(fan, d);
    r.half_self_intersection = Rational(r.self_intersection, 2);
    r.simplex_sum = 0;
    for (const auto& flag : enumerate_tflags(fan)) {
        r.per_flag.push_back(flag_contribution(fan, d, flag, dec));
        r.simplex_sum += r.per_flag.back().subtotal;
    }
    r.symbol_sum = intersection_number_via_symbols(fan, d, dec);
    r.symbol_sum_half = Rational(r.symbol_sum, 2);
    r.trivialization = trivialization_polytope(fan, d, display_flag);
    r.lhs_trivialization_area = polygon_area(r.trivialization);
    r.agree = r.area_polytope == r.half_self_intersection && r.area_polytope == r.simplex_sum &&
              r.area_polytope == r.symbol_sum_half && r.area_polytope == r.lhs_trivialization_area;
    return r;
}

}  // namespace toricvol
