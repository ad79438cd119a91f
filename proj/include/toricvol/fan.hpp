#pragma once

// Smooth complete fans in the plane, given by cyclically ordered rays.

#include "toricvol/error.hpp"
#include "toricvol/lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toricvol {

struct FanValidation;

/// Smooth complete 2-dimensional fan. Rays are primitive and counterclockwise;
/// maximal cone j is spanned by ray j and ray (j+1) mod N, and each such pair
/// is a positively oriented lattice basis.
class Fan2D {
public:
    /// Validates and throws InvalidFan listing every violation.
    static Fan2D from_rays(std::vector<LatticeVector> rays);

    const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
    std::size_t ray_count() const noexcept { return rays_.size(); }
    std::size_t cone_count() const noexcept { return rays_.size(); }

    const LatticeVector& ray(std::size_t i) const;
    std::size_t next(std::size_t i) const noexcept { return (i + 1) % rays_.size(); }
    std::size_t prev(std::size_t i) const noexcept { return (i + rays_.size() - 1) % rays_.size(); }

    /// The two rays of cone j, in counterclockwise order.
    std::pair<std::size_t, std::size_t> cone_rays(std::size_t cone) const;
    bool cone_contains_ray(std::size_t cone, std::size_t ray) const;

    friend bool operator==(const Fan2D&, const Fan2D&) = default;

private:
    friend FanValidation validate_fan(std::vector<LatticeVector> rays);
    explicit Fan2D(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {}
    std::vector<LatticeVector> rays_;
};

/// Either a fan or the full list of reasons it is not one.
struct FanValidation {
    std::optional<Fan2D> fan;
    std::vector<FanViolation> violations;

    bool ok() const noexcept { return fan.has_value(); }
};

FanValidation validate_fan(std::vector<LatticeVector> rays);

/// Number of counterclockwise turns made by the cyclic ray sequence. Only
/// meaningful when every consecutive cross product is positive.
Integer winding_number(const std::vector<LatticeVector>& rays);

/// F_l with rays [(1,0), (0,1), (-1,l), (0,-1)]. In odd/even labels:
/// ray0 = s7, ray1 = s1, ray2 = s3, ray3 = s5 and cone0 = u0, cone1 = u2,
/// cone2 = u4, cone3 = u6 (cone u_i has facets s_{i-1}, s_{i+1}).
Fan2D hirzebruch_fan(const Integer& l);

/// Fan of the projective plane: [(1,0), (0,1), (-1,-1)].
Fan2D projective_plane_fan();

/// Dual basis (m, m') of cone j: <m, ray_j> = 1, <m, ray_{j+1}> = 0,
/// <m', ray_j> = 0, <m', ray_{j+1}> = 1.
std::pair<LatticeVector, LatticeVector> chart_dual_basis(const Fan2D& fan, std::size_t cone);

/// Dual basis of an arbitrary unimodular pair (|cross| = 1), same pairing rules.
std::pair<LatticeVector, LatticeVector> dual_basis(const LatticeVector& first, const LatticeVector& second);

/// Inserts ray_j + ray_{j+1} between positions j and j+1 (blow-up of a fixed point).
Fan2D star_subdivide(const Fan2D& fan, std::size_t cone);

/// How torus orbits are handed to the maximal cones. Every orbit goes to a
/// cone whose affine chart contains it.
struct DecompositionVariant {
    enum class RayRule {
        FirstRay,     // cone j owns ray j
        SuccessorRay  // cone j owns ray j+1
    };
    RayRule rays = RayRule::FirstRay;
    std::size_t generic_owner = 0;

    /// Parses "default", "successor" or "generic-at=K".
    static DecompositionVariant parse(std::string_view tag);
    std::string tag() const;
};

class OrbitDecomposition {
public:
    /// Explicit assignment; throws InvalidArgument if a ray is handed to a cone
    /// that does not contain it or an index is out of range.
    static OrbitDecomposition make(const Fan2D& fan, std::size_t generic_owner,
                                   std::vector<std::size_t> ray_owner);

    std::size_t owner_of_generic() const noexcept { return generic_owner_; }
    std::size_t owner_of_ray(std::size_t ray) const { return ray_owner_.at(ray); }
    /// Each fixed point belongs to its own cone.
    std::size_t owner_of_cone(std::size_t cone) const noexcept { return cone; }
    std::size_t ray_count() const noexcept { return ray_owner_.size(); }

private:
    OrbitDecomposition(std::size_t generic, std::vector<std::size_t> rays)
        : generic_owner_(generic), ray_owner_(std::move(rays)) {}
    std::size_t generic_owner_;
    std::vector<std::size_t> ray_owner_;
};

OrbitDecomposition standard_decomposition(const Fan2D& fan, const DecompositionVariant& variant = {});

}  // namespace toricvol
