#pragma once

// Rank-2 valuations attached to torus-invariant flags X > V(ray) > V(cone).

#include "toricvol/divisor.hpp"
#include "toricvol/fan.hpp"

#include <set>
#include <utility>

namespace toricvol {

/// Flag X > V(ray) > V(cone); the ray must be a face of the cone.
struct TFlag {
    std::size_t ray = 0;
    std::size_t cone = 0;

    friend bool operator==(const TFlag&, const TFlag&) = default;
    friend auto operator<=>(const TFlag&, const TFlag&) = default;
};

/// Throws InvalidArgument for out-of-range indices or a ray not in the cone.
void check_flag(const Fan2D& fan, const TFlag& flag);

/// All 2N torus-invariant flags: for each cone j, (ray j, cone j) then (ray j+1, cone j).
std::vector<TFlag> enumerate_tflags(const Fan2D& fan);

/// Pair of integers (w1, w2) ordered lexicographically.
struct ValuationVector {
    Integer first;
    Integer second;

    friend bool operator==(const ValuationVector&, const ValuationVector&) = default;
    friend bool operator<(const ValuationVector& a, const ValuationVector& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
    }
    LatticeVector as_vector() const { return {first, second}; }
};

/// w1 = order of vanishing along the flag divisor, w2 = order at the fixed
/// point of what remains after dividing out the uniformizer dual to first_ray.
struct Rank2Valuation {
    LatticeVector first_ray;
    LatticeVector second_ray;

    /// Uniformizer of the flag divisor and the coordinate on it, both as
    /// exponents (the dual basis of first_ray, second_ray).
    std::pair<LatticeVector, LatticeVector> uniformizers() const { return dual_basis(first_ray, second_ray); }
};

Rank2Valuation flag_valuation(const Fan2D& fan, const TFlag& flag);

ValuationVector value(const Rank2Valuation& w, const Monomial& m);

/// Hull of the valuation vectors of the Cartier data. Throws NotAmple.
Polygon trivialization_polytope(const Fan2D& fan, const TorusDivisor& d, const TFlag& flag);

struct SemigroupElement {
    ValuationVector value;
    unsigned level;

    friend bool operator==(const SemigroupElement&, const SemigroupElement&) = default;
    friend bool operator<(const SemigroupElement& a, const SemigroupElement& b) {
        return a.level < b.level || (a.level == b.level && a.value < b.value);
    }
};

/// {(value(s), m) : s a lattice point of m*P_D, 0 <= m <= max_level}.
std::set<SemigroupElement> graded_semigroup(const Fan2D& fan, const TorusDivisor& d, const TFlag& flag,
                                            unsigned max_level);

/// (1/m) * hull of the level-m semigroup points.
Polygon normalized_level_hull(const std::set<SemigroupElement>& semigroup, unsigned level);

}  // namespace toricvol
