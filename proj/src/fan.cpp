#include "toricvol/fan.hpp"

#include <charconv>

namespace toricvol {

namespace {

std::string join_messages(const std::vector<FanViolation>& violations) {
    std::string out = "invalid fan";
    for (const auto& v : violations) out += "; " + v.message;
    return out;
}

}  // namespace

InvalidFan::InvalidFan(std::vector<FanViolation> violations)
    : Error(join_messages(violations)), violations_(std::move(violations)) {}

Integer winding_number(const std::vector<LatticeVector>& rays) {
    // Count steps whose half-open arc (r_j, r_{j+1}] meets the +x direction.
    Integer turns = 0;
    for (std::size_t j = 0; j < rays.size(); ++j) {
        const auto& u = rays[j];
        const auto& v = rays[(j + 1) % rays.size()];
        if (u.y < 0 && v.y >= 0) ++turns;
    }
    return turns;
}

FanValidation validate_fan(std::vector<LatticeVector> rays) {
    FanValidation result;
    auto& bad = result.violations;
    const std::size_t n = rays.size();
    if (n < 3) {
        bad.push_back({FanViolation::Kind::TooFewRays, n,
                       "a complete fan needs at least 3 rays, got " + std::to_string(n)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_primitive(rays[i]))
            bad.push_back({FanViolation::Kind::NonPrimitiveRay, i,
                           "ray " + std::to_string(i) + " " + rays[i].str() + " is not primitive"});
    }
    bool oriented = n >= 3;
    for (std::size_t j = 0; n >= 2 && j < n; ++j) {
        const auto c = cross(rays[j], rays[(j + 1) % n]);
        if (c <= 0) oriented = false;
        if (c != 1)
            bad.push_back({FanViolation::Kind::NotUnimodular, j,
                           "cross(ray " + std::to_string(j) + ", ray " + std::to_string((j + 1) % n) +
                               ") = " + c.str() + ", expected 1"});
    }
    if (oriented) {
        const auto w = winding_number(rays);
        if (w != 1)
            bad.push_back({FanViolation::Kind::WindingNumber, 0,
                           "rays wind " + w.str() + " times around the origin, expected 1"});
    }
    if (bad.empty()) result.fan = Fan2D(std::move(rays));
    return result;
}

Fan2D Fan2D::from_rays(std::vector<LatticeVector> rays) {
    auto v = validate_fan(std::move(rays));
    if (!v.ok()) throw InvalidFan(std::move(v.violations));
    return std::move(*v.fan);
}

const LatticeVector& Fan2D::ray(std::size_t i) const {
    if (i >= rays_.size()) throw InvalidArgument("ray index " + std::to_string(i) + " out of range");
    return rays_[i];
}

std::pair<std::size_t, std::size_t> Fan2D::cone_rays(std::size_t cone) const {
    if (cone >= rays_.size()) throw InvalidArgument("cone index " + std::to_string(cone) + " out of range");
    return {cone, next(cone)};
}

bool Fan2D::cone_contains_ray(std::size_t cone, std::size_t ray) const {
    const auto [a, b] = cone_rays(cone);
    return ray == a || ray == b;
}

Fan2D hirzebruch_fan(const Integer& l) {
    if (l < 1) throw InvalidArgument("hirzebruch_fan: l must be >= 1, got " + l.str());
    return Fan2D::from_rays({{1, 0}, {0, 1}, {-1, l}, {0, -1}});
}

Fan2D projective_plane_fan() { return Fan2D::from_rays({{1, 0}, {0, 1}, {-1, -1}}); }

std::pair<LatticeVector, LatticeVector> dual_basis(const LatticeVector& first, const LatticeVector& second) {
    const Integer det = cross(first, second);
    if (det != 1 && det != -1)
        throw InvalidArgument("dual_basis: " + first.str() + ", " + second.str() + " is not a lattice basis");
    // Inverse of the matrix with rows first, second; its columns are the dual basis.
    LatticeVector m{second.y * det, -second.x * det};
    LatticeVector m_prime{-first.y * det, first.x * det};
    return {m, m_prime};
}

std::pair<LatticeVector, LatticeVector> chart_dual_basis(const Fan2D& fan, std::size_t cone) {
    const auto [a, b] = fan.cone_rays(cone);
    return dual_basis(fan.ray(a), fan.ray(b));
}

Fan2D star_subdivide(const Fan2D& fan, std::size_t cone) {
    const auto [a, b] = fan.cone_rays(cone);
    std::vector<LatticeVector> rays = fan.rays();
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(a) + 1, fan.ray(a) + fan.ray(b));
    return Fan2D::from_rays(std::move(rays));
}

DecompositionVariant DecompositionVariant::parse(std::string_view tag) {
    DecompositionVariant v;
    if (tag == "default") return v;
    if (tag == "successor") {
        v.rays = RayRule::SuccessorRay;
        return v;
    }
    constexpr std::string_view prefix = "generic-at=";
    if (tag.starts_with(prefix)) {
        const auto digits = tag.substr(prefix.size());
        std::size_t k = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
            v.generic_owner = k;
            return v;
        }
    }
    throw InvalidArgument("unknown decomposition variant '" + std::string(tag) +
                          "' (expected default, successor or generic-at=K)");
}

std::string DecompositionVariant::tag() const {
    if (rays == RayRule::SuccessorRay) {
        return generic_owner == 0 ? "successor" : "successor,generic-at=" + std::to_string(generic_owner);
    }
    return generic_owner == 0 ? "default" : "generic-at=" + std::to_string(generic_owner);
}

OrbitDecomposition OrbitDecomposition::make(const Fan2D& fan, std::size_t generic_owner,
                                            std::vector<std::size_t> ray_owner) {
    const std::size_t n = fan.ray_count();
    if (generic_owner >= n)
        throw InvalidArgument("generic orbit assigned to nonexistent cone " + std::to_string(generic_owner));
    if (ray_owner.size() != n)
        throw InvalidArgument("decomposition must assign all " + std::to_string(n) + " ray orbits");
    for (std::size_t r = 0; r < n; ++r) {
        if (ray_owner[r] >= n || !fan.cone_contains_ray(ray_owner[r], r))
            throw InvalidArgument("orbit of ray " + std::to_string(r) + " assigned to cone " +
                                  std::to_string(ray_owner[r]) + ", which does not contain it");
    }
    return OrbitDecomposition(generic_owner, std::move(ray_owner));
}

OrbitDecomposition standard_decomposition(const Fan2D& fan, const DecompositionVariant& variant) {
    const std::size_t n = fan.ray_count();
    std::vector<std::size_t> owner(n);
    for (std::size_t r = 0; r < n; ++r)
        owner[r] = variant.rays == DecompositionVariant::RayRule::FirstRay ? r : fan.prev(r);
    return OrbitDecomposition::make(fan, variant.generic_owner, std::move(owner));
}

}  // namespace toricvol
