#include "toricvol/divisor.hpp"

#include <algorithm>

namespace toricvol {

namespace {

Integer floor_div(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);  // d > 0
    Integer f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

Integer ceil_div(const Rational& q) { return -floor_div(-q); }

// Feasible pairwise intersections of the boundary lines <h, ray_i> = -scale*d_i.
std::vector<RationalPoint> halfplane_vertices(const Fan2D& fan, const TorusDivisor& d, const Integer& scale) {
    const auto& rays = fan.rays();
    const std::size_t n = rays.size();
    auto feasible = [&](const RationalPoint& p) {
        for (std::size_t i = 0; i < n; ++i)
            if (p.x * rays[i].x + p.y * rays[i].y < -scale * d.coeffs[i]) return false;
        return true;
    };
    std::vector<RationalPoint> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const Integer det = cross(rays[i], rays[k]);
            if (det == 0) continue;
            // Solve h.r_i = c_i, h.r_k = c_k by Cramer's rule.
            const Integer ci = -scale * d.coeffs[i];
            const Integer ck = -scale * d.coeffs[k];
            RationalPoint p{make_rational(ci * rays[k].y - ck * rays[i].y, det),
                            make_rational(ck * rays[i].x - ci * rays[k].x, det)};
            if (feasible(p)) out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace

TorusDivisor hirzebruch_divisor(const Integer& a, const Integer& b) { return TorusDivisor({0, a, b, 0}); }

void check_divisor(const Fan2D& fan, const TorusDivisor& d) {
    if (d.coeffs.size() != fan.ray_count())
        throw InvalidArgument("divisor has " + std::to_string(d.coeffs.size()) + " coefficients but the fan has " +
                              std::to_string(fan.ray_count()) + " rays");
}

CartierCocycle cartier_data(const Fan2D& fan, const TorusDivisor& d) {
    check_divisor(fan, d);
    CartierCocycle h;
    h.local_equations.reserve(fan.cone_count());
    for (std::size_t j = 0; j < fan.cone_count(); ++j) {
        const auto [m, m_prime] = chart_dual_basis(fan, j);
        h.local_equations.push_back({(-d.coeffs[j]) * m + (-d.coeffs[fan.next(j)]) * m_prime});
    }
    return h;
}

Monomial cech_cocycle(const CartierCocycle& h, std::size_t alpha, std::size_t beta) { return h[beta] / h[alpha]; }

GlobalGeneration is_globally_generated(const Fan2D& fan, const TorusDivisor& d) {
    const auto h = cartier_data(fan, d);
    GlobalGeneration result;
    for (std::size_t j = 0; j < fan.cone_count(); ++j) {
        for (std::size_t i = 0; i < fan.ray_count(); ++i) {
            Integer slack = pairing(h[j].exponent, fan.ray(i)) + d.coeffs[i];
            if (slack < 0) result.violations.push_back({j, i, std::move(slack)});
        }
    }
    result.generated = result.violations.empty();
    return result;
}

Ampleness ampleness(const Fan2D& fan, const TorusDivisor& d) {
    const auto h = cartier_data(fan, d);
    Ampleness result;
    for (std::size_t j = 0; j < fan.cone_count(); ++j) {
        for (std::size_t i = 0; i < fan.ray_count(); ++i) {
            if (fan.cone_contains_ray(j, i)) continue;
            Integer slack = pairing(h[j].exponent, fan.ray(i)) + d.coeffs[i];
            if (slack <= 0) result.violations.push_back({j, i, std::move(slack)});
        }
    }
    result.ample = result.violations.empty();
    return result;
}

bool is_ample(const Fan2D& fan, const TorusDivisor& d) { return ampleness(fan, d).ample; }

Polygon divisor_polytope(const Fan2D& fan, const TorusDivisor& d) {
    const auto gg = is_globally_generated(fan, d);
    if (!gg.generated) {
        const auto& w = gg.violations.front();
        throw NotGloballyGenerated(w.cone, w.ray,
                                   "divisor is not globally generated: local equation of cone " +
                                       std::to_string(w.cone) + " violates the inequality of ray " +
                                       std::to_string(w.ray) + " (slack " + w.slack.str() + ")");
    }
    const auto h = cartier_data(fan, d);
    std::vector<LatticeVector> pts;
    pts.reserve(h.size());
    for (const auto& mono : h.local_equations) pts.push_back(mono.exponent);
    return convex_hull_2d(pts);
}

std::vector<Monomial> section_lattice_points(const Fan2D& fan, const TorusDivisor& d, unsigned m) {
    check_divisor(fan, d);
    const Integer scale = m;
    const auto corners = halfplane_vertices(fan, d, scale);
    std::vector<Monomial> out;
    if (corners.empty()) return out;

    Rational xmin = corners.front().x, xmax = xmin, ymin = corners.front().y, ymax = ymin;
    for (const auto& p : corners) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const auto& rays = fan.rays();
    for (Integer x = ceil_div(xmin); x <= floor_div(xmax); ++x) {
        for (Integer y = ceil_div(ymin); y <= floor_div(ymax); ++y) {
            bool inside = true;
            for (std::size_t i = 0; i < rays.size() && inside; ++i)
                inside = x * rays[i].x + y * rays[i].y >= -scale * d.coeffs[i];
            if (inside) out.push_back({{x, y}});
        }
    }
    return out;
}

}  // namespace toricvol
