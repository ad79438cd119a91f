#include "toricvol/milnor.hpp"

#include <limits>

namespace toricvol {

namespace {

Rational rational_pow(const Rational& base, const Integer& k) {
    if (k == 0 || base == 1) return 1;
    if (base == -1) return (k % 2 == 0) ? 1 : -1;
    const Integer mag = abs(k);
    if (mag > std::numeric_limits<unsigned>::max())
        throw InvalidArgument("exponent " + k.str() + " too large for a rational power");
    const auto e = mag.convert_to<unsigned>();
    Rational r(boost::multiprecision::pow(numerator(base), e), boost::multiprecision::pow(denominator(base), e));
    return k < 0 ? Rational(1) / r : r;
}

Rational parity_sign(const Integer& k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

MonomialFn::MonomialFn(Rational c, LatticeVector e) : coeff(std::move(c)), exponent(std::move(e)) {
    if (coeff == 0) throw InvalidArgument("monomial function with zero coefficient");
}

MonomialFn operator*(const MonomialFn& a, const MonomialFn& b) {
    return {a.coeff * b.coeff, a.exponent + b.exponent};
}

MonomialFn operator/(const MonomialFn& a, const MonomialFn& b) {
    return {a.coeff / b.coeff, a.exponent - b.exponent};
}

MonomialFn MonomialFn::pow(const Integer& k) const { return {rational_pow(coeff, k), k * exponent}; }

ResidueElement ResidueElement::pow(const Integer& k) const { return {rational_pow(coeff, k), k * exponent}; }

ResidueElement collapse(const ResidueCombination& r) {
    ResidueElement out;
    for (const auto& term : r) out = out * term.element.pow(term.multiplicity);
    return out;
}

SymbolK2 SymbolK2::pure(const MonomialFn& f, const MonomialFn& g) {
    SymbolK2 s;
    s.add(1, f, g);
    return s;
}

SymbolK2& SymbolK2::add(const Integer& multiplicity, const MonomialFn& f, const MonomialFn& g) {
    if (f.coeff == 0 || g.coeff == 0) throw InvalidArgument("symbol entry with zero coefficient");
    if (multiplicity == 0 || f.is_one() || g.is_one()) return *this;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->first == f && it->second == g) {
            it->multiplicity += multiplicity;
            if (it->multiplicity == 0) terms_.erase(it);
            return *this;
        }
    }
    terms_.push_back({multiplicity, f, g});
    return *this;
}

SymbolK2& SymbolK2::operator+=(const SymbolK2& other) {
    for (const auto& t : other.terms_) add(t.multiplicity, t.first, t.second);
    return *this;
}

SymbolK2 operator-(const SymbolK2& a) {
    SymbolK2 out = a;
    for (auto& t : out.terms_) t.multiplicity = -t.multiplicity;
    return out;
}

FlagChart flag_chart(const Fan2D& fan, const TFlag& flag) {
    const auto w = flag_valuation(fan, flag);
    const auto [pi, t] = w.uniformizers();
    return {flag, w, pi, t};
}

Integer ray_valuation(const LatticeVector& ray, const MonomialFn& f) { return pairing(f.exponent, ray); }

ResidueElement reduce(const FlagChart& chart, const MonomialFn& f) {
    // Write the exponent in the chart basis: e = a*pi + k*t. Units along the
    // divisor have a = 0 and restrict to c * t^k.
    const Integer det = cross(chart.uniformizer, chart.coordinate);
    const Integer a = cross(f.exponent, chart.coordinate) / det;
    const Integer k = cross(chart.uniformizer, f.exponent) / det;
    if (a != 0)
        throw InvalidArgument("reduce: " + f.exponent.str() + " is not a unit along the flag divisor");
    return {f.coeff, k};
}

ResidueCombination tame_boundary(const FlagChart& chart, const SymbolK2& s) {
    ResidueCombination out;
    const auto& ray = chart.valuation.first_ray;
    for (const auto& term : s.terms()) {
        const Integer vf = ray_valuation(ray, term.first);
        const Integer vg = ray_valuation(ray, term.second);
        const MonomialFn unit = term.second.pow(vf) / term.first.pow(vg);
        ResidueElement r = reduce(chart, unit);
        r.coeff *= parity_sign(vf * vg);
        out.push_back({term.multiplicity, std::move(r)});
    }
    return out;
}

Integer residue_order(const ResidueCombination& r) {
    Integer total = 0;
    for (const auto& term : r) total += term.multiplicity * term.element.exponent;
    return total;
}

Integer iterated_boundary(const FlagChart& chart, const SymbolK2& s) { return residue_order(tame_boundary(chart, s)); }

ResidueElement specialization(const FlagChart& chart, const MonomialFn& pi, const MonomialFn& f) {
    const auto& ray = chart.valuation.first_ray;
    if (ray_valuation(ray, pi) != 1) throw InvalidArgument("specialization: pi is not a uniformizer");
    return reduce(chart, f * pi.pow(-ray_valuation(ray, f)));
}

DeterminantCheck det_formula_check(const FlagChart& chart, const MonomialFn& f, const MonomialFn& g) {
    const auto wf = value(chart.valuation, Monomial{f.exponent});
    const auto wg = value(chart.valuation, Monomial{g.exponent});
    return {iterated_boundary(chart, SymbolK2::pure(f, g)), det_n({{wf.first, wg.first}, {wf.second, wg.second}})};
}

ValuationVector valuation_via_symbols(const FlagChart& chart, const MonomialFn& f,
                                      const std::optional<MonomialFn>& pi) {
    const MonomialFn uniformizer = pi.value_or(MonomialFn{1, chart.uniformizer});
    if (ray_valuation(chart.valuation.first_ray, uniformizer) != 1)
        throw InvalidArgument("valuation_via_symbols: pi is not a uniformizer");
    return {ray_valuation(chart.valuation.first_ray, f), iterated_boundary(chart, SymbolK2::pure(uniformizer, f))};
}

SymbolK2 cocycle_symbol(const CartierCocycle& h, std::size_t a0, std::size_t a1, std::size_t a2) {
    return SymbolK2::pure(MonomialFn(cech_cocycle(h, a0, a1)), MonomialFn(cech_cocycle(h, a1, a2)));
}

SymbolK2 cocycle_expansion(const CartierCocycle& h, std::size_t a0, std::size_t a1, std::size_t a2) {
    const MonomialFn h0(h[a0]), h1(h[a1]), h2(h[a2]);
    SymbolK2 s;
    s.add(1, h1, h2);
    s.add(-1, h0, h2);
    s.add(1, h0, h1);
    return s;
}

SymbolK2 flag_cocycle_symbol(const CartierCocycle& h, const OrbitDecomposition& dec, const TFlag& flag) {
    return cocycle_symbol(h, dec.owner_of_generic(), dec.owner_of_ray(flag.ray), dec.owner_of_cone(flag.cone));
}

Integer intersection_number_via_symbols(const Fan2D& fan, const TorusDivisor& d, const OrbitDecomposition& dec) {
    if (dec.ray_count() != fan.ray_count()) throw InvalidArgument("decomposition belongs to a different fan");
    const auto h = cartier_data(fan, d);
    Integer total = 0;
    // Fixed points are Q-rational, so every residue degree is 1.
    for (const auto& flag : enumerate_tflags(fan))
        total += iterated_boundary(flag_chart(fan, flag), flag_cocycle_symbol(h, dec, flag));
    return total;
}

}  // namespace toricvol
