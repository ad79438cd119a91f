#pragma once

// Torus-invariant divisors on a smooth complete toric surface: Cartier data,
// divisor polytopes, positivity and sections.

#include "toricvol/fan.hpp"
#include "toricvol/lattice.hpp"

#include <optional>
#include <vector>

namespace toricvol {

/// D = sum_i coeffs[i] * D_i, one coefficient per ray of the fan it lives on.
struct TorusDivisor {
    std::vector<Integer> coeffs;

    TorusDivisor() = default;
    explicit TorusDivisor(std::vector<Integer> c) : coeffs(std::move(c)) {}
    static TorusDivisor zero(const Fan2D& fan) { return TorusDivisor(std::vector<Integer>(fan.ray_count())); }

    friend bool operator==(const TorusDivisor&, const TorusDivisor&) = default;
};

/// Hirzebruch divisor a*s1 + b*s3, i.e. coefficients [0, a, b, 0] in ray order.
TorusDivisor hirzebruch_divisor(const Integer& a, const Integer& b);

/// x^e for e in M.
struct Monomial {
    LatticeVector exponent;

    friend Monomial operator*(const Monomial& a, const Monomial& b) { return {a.exponent + b.exponent}; }
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return {a.exponent - b.exponent}; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; }
    bool is_one() const { return exponent.is_zero(); }
};

/// Local equation h_j of D on each affine chart U_j:
/// <h_j, ray_j> = -d_j and <h_j, ray_{j+1}> = -d_{j+1}.
struct CartierCocycle {
    std::vector<Monomial> local_equations;

    const Monomial& operator[](std::size_t cone) const { return local_equations.at(cone); }
    std::size_t size() const noexcept { return local_equations.size(); }
};

/// Throws InvalidArgument when the divisor length differs from the ray count.
void check_divisor(const Fan2D& fan, const TorusDivisor& d);

CartierCocycle cartier_data(const Fan2D& fan, const TorusDivisor& d);

/// Transition monomial f_ab = h_b / h_a.
Monomial cech_cocycle(const CartierCocycle& h, std::size_t alpha, std::size_t beta);

/// A (cone, ray) pair where <h_cone, ray> + d_ray fails the required sign.
struct PositivityWitness {
    std::size_t cone;
    std::size_t ray;
    Integer slack;  // <h_cone, ray> + d_ray
};

struct GlobalGeneration {
    bool generated = true;
    std::vector<PositivityWitness> violations;  // slack < 0
};

GlobalGeneration is_globally_generated(const Fan2D& fan, const TorusDivisor& d);

struct Ampleness {
    bool ample = true;
    std::vector<PositivityWitness> violations;  // slack <= 0 for rays outside the cone
};

Ampleness ampleness(const Fan2D& fan, const TorusDivisor& d);
bool is_ample(const Fan2D& fan, const TorusDivisor& d);

/// P_D = {h : <h, ray_i> >= -d_i for all i}, as the hull of the Cartier data.
/// Throws NotGloballyGenerated naming the first violated (cone, ray) pair.
Polygon divisor_polytope(const Fan2D& fan, const TorusDivisor& d);

/// Lattice points of m * P_D, sorted. Empty if m * P_D has none.
std::vector<Monomial> section_lattice_points(const Fan2D& fan, const TorusDivisor& d, unsigned m);

}  // namespace toricvol
