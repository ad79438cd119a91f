#pragma once

// Formal K_2 symbols of monomial functions on a toric surface over Q and
// their tame-symbol boundary maps along torus-invariant flags.
//
// For a flag X > V(ray) > V(cone) the chart of the cone has coordinates
// (pi, t): pi cuts out V(ray) and t restricts to a coordinate on V(ray)
// vanishing at the fixed point. The first boundary lands in k(t)^x, the
// second in Z (order of vanishing in t).

#include "toricvol/divisor.hpp"
#include "toricvol/fan.hpp"
#include "toricvol/valuation.hpp"

#include <optional>
#include <vector>

namespace toricvol {

/// c * x^e, a unit of k(x, y) with k = Q.
struct MonomialFn {
    Rational coeff{1};
    LatticeVector exponent;

    MonomialFn() = default;
    MonomialFn(Rational c, LatticeVector e);
    explicit MonomialFn(const Monomial& m) : exponent(m.exponent) {}

    friend MonomialFn operator*(const MonomialFn& a, const MonomialFn& b);
    friend MonomialFn operator/(const MonomialFn& a, const MonomialFn& b);
    MonomialFn pow(const Integer& k) const;

    bool is_one() const { return coeff == 1 && exponent.is_zero(); }
    friend bool operator==(const MonomialFn&, const MonomialFn&) = default;
};

/// c * t^k in the residue field k(t) of the flag divisor.
struct ResidueElement {
    Rational coeff{1};
    Integer exponent;

    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
        return {a.coeff * b.coeff, a.exponent + b.exponent};
    }
    ResidueElement pow(const Integer& k) const;
    friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
};

/// Formal Z-combination of classes in K_1 = k(t)^x, written additively.
struct ResidueTerm {
    Integer multiplicity;
    ResidueElement element;
};
using ResidueCombination = std::vector<ResidueTerm>;

/// Collapses a combination to a single unit (multiplicative form of the sum).
ResidueElement collapse(const ResidueCombination& r);

struct SymbolTerm {
    Integer multiplicity;
    MonomialFn first;
    MonomialFn second;
};

/// Finite formal sum of symbols {f, g}. No Steinberg relations are applied;
/// only the images under boundary maps are meaningful.
class SymbolK2 {
public:
    SymbolK2() = default;
    static SymbolK2 pure(const MonomialFn& f, const MonomialFn& g);

    SymbolK2& add(const Integer& multiplicity, const MonomialFn& f, const MonomialFn& g);
    SymbolK2& operator+=(const SymbolK2& other);
    friend SymbolK2 operator+(SymbolK2 a, const SymbolK2& b) { return a += b; }
    friend SymbolK2 operator-(const SymbolK2& a);
    friend SymbolK2 operator-(SymbolK2 a, const SymbolK2& b) { return a += -b; }

    /// Terms with an entry equal to 1 or multiplicity 0 are dropped and equal
    /// pairs merged.
    const std::vector<SymbolTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

private:
    std::vector<SymbolTerm> terms_;
};

/// Valuation and chart coordinates for one flag.
struct FlagChart {
    TFlag flag;
    Rank2Valuation valuation;
    LatticeVector uniformizer;  // exponent of pi, dual to the flag ray
    LatticeVector coordinate;   // exponent of t, dual to the other ray
};

FlagChart flag_chart(const Fan2D& fan, const TFlag& flag);

/// Order of vanishing of f along the divisor of `ray`.
Integer ray_valuation(const LatticeVector& ray, const MonomialFn& f);

/// Image in k(t)^x of a unit along the flag divisor. Throws InvalidArgument
/// if f vanishes or has a pole along V(ray).
ResidueElement reduce(const FlagChart& chart, const MonomialFn& f);

/// d_v{f, g} = (-1)^{v(f)v(g)} * red(g^{v(f)} / f^{v(g)}), extended additively.
ResidueCombination tame_boundary(const FlagChart& chart, const SymbolK2& s);

/// Second boundary: order in t at the fixed point, summed with multiplicities.
Integer residue_order(const ResidueCombination& r);

Integer iterated_boundary(const FlagChart& chart, const SymbolK2& s);

/// s^pi(f) = red(f * pi^{-v(f)}). Throws InvalidArgument unless v(pi) = 1.
ResidueElement specialization(const FlagChart& chart, const MonomialFn& pi, const MonomialFn& f);

/// Boundary of {f, g} against det [[w1(f), w1(g)], [w2(f), w2(g)]].
struct DeterminantCheck {
    Integer boundary;
    Integer determinant;
    bool holds() const { return boundary == determinant; }
};

DeterminantCheck det_formula_check(const FlagChart& chart, const MonomialFn& f, const MonomialFn& g);

/// (d_1{f}, d_2 d_1{pi, f}); pi defaults to the chart uniformizer and must
/// satisfy v(pi) = 1.
ValuationVector valuation_via_symbols(const FlagChart& chart, const MonomialFn& f,
                                      const std::optional<MonomialFn>& pi = std::nullopt);

/// {f_{a0 a1}, f_{a1 a2}} built from the transition monomials.
SymbolK2 cocycle_symbol(const CartierCocycle& h, std::size_t a0, std::size_t a1, std::size_t a2);

/// sum_c (-1)^c {h_{a_m} : m != c}.
SymbolK2 cocycle_expansion(const CartierCocycle& h, std::size_t a0, std::size_t a1, std::size_t a2);

/// Cocycle symbol of the orbit owners of a flag: (generic, flag ray, flag cone).
SymbolK2 flag_cocycle_symbol(const CartierCocycle& h, const OrbitDecomposition& dec, const TFlag& flag);

/// Sum over the torus-invariant flags of the iterated boundary of the cocycle
/// symbol. Equals D^2 for smooth complete fans.
Integer intersection_number_via_symbols(const Fan2D& fan, const TorusDivisor& d, const OrbitDecomposition& dec);

}  // namespace toricvol
