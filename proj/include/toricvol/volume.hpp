#pragma once

// Volume of an ample divisor on a smooth complete toric surface, computed by
// independent routes: polytope area, classical self-intersection, the
// flag-wise signed simplex sum and the iterated tame-symbol sum.

#include "toricvol/divisor.hpp"
#include "toricvol/fan.hpp"
#include "toricvol/milnor.hpp"
#include "toricvol/valuation.hpp"

#include <array>
#include <string>
#include <vector>

namespace toricvol {

/// One summand (-1)^c * (1/2) * det(matrix) of a flag's contribution.
struct SimplexTerm {
    TFlag flag;
    unsigned omitted = 0;                 // c in {0, 1, 2}
    std::array<std::size_t, 2> sections;  // cone indices of the two retained local equations
    std::array<std::array<Integer, 2>, 2> matrix;  // rows (w1, w2), columns = sections
    Rational signed_volume;
    Integer residue_degree{1};
};

struct FlagContribution {
    TFlag flag;
    std::array<std::size_t, 3> owners;  // cones owning the generic orbit, the flag ray, the fixed point
    Rational subtotal;
    std::vector<SimplexTerm> terms;
    Integer symbol_boundary;  // iterated boundary of the cocycle symbol at this flag
};

/// Throws NotAmple for non-ample divisors.
FlagContribution flag_contribution(const Fan2D& fan, const TorusDivisor& d, const TFlag& flag,
                                   const OrbitDecomposition& dec);

Rational simplex_sum_volume(const Fan2D& fan, const TorusDivisor& d, const OrbitDecomposition& dec);

/// Self-intersection number -a_i where ray_{i-1} + ray_{i+1} = a_i * ray_i.
Integer ray_self_intersection(const Fan2D& fan, std::size_t ray);

/// D^2 from the intersection form on the torus-invariant curves.
Integer self_intersection_classical(const Fan2D& fan, const TorusDivisor& d);

struct VolumeReport {
    bool ample = false;
    std::vector<std::string> diagnostics;  // filled when not ample

    TFlag display_flag;
    std::string decomposition;

    Rational area_polytope;
    Integer self_intersection;        // D^2, classical
    Rational half_self_intersection;  // D^2 / 2
    Rational simplex_sum;
    Integer symbol_sum;               // intersection number via symbols
    Rational symbol_sum_half;
    Rational lhs_trivialization_area;  // for display_flag
    Polygon polytope;
    Polygon trivialization;
    std::vector<FlagContribution> per_flag;
    bool agree = false;

    std::size_t contributing_flag_count() const;
};

/// Non-ample divisors give a report with ample = false and diagnostics.
VolumeReport okounkov_volume_report(const Fan2D& fan, const TorusDivisor& d,
                                    const DecompositionVariant& variant = {}, const TFlag& display_flag = {0, 0});

}  // namespace toricvol
