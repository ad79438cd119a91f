#pragma once

// Exact integer/rational linear algebra and planar convex geometry.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace toricvol {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n / d with the sign moved to the numerator; cpp_rational rejects a
/// negative denominator. Throws std::domain_error for d = 0.
Rational make_rational(Integer n, Integer d);

/// Element of Z^2 (the lattices N and M of a toric surface share this type).
struct LatticeVector {
    Integer x;
    Integer y;

    LatticeVector() = default;
    LatticeVector(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}

    LatticeVector& operator+=(const LatticeVector& o) { x += o.x; y += o.y; return *this; }
    LatticeVector& operator-=(const LatticeVector& o) { x -= o.x; y -= o.y; return *this; }

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator-(const LatticeVector& a) { return {-a.x, -a.y}; }
    friend LatticeVector operator*(const Integer& k, const LatticeVector& v) { return {k * v.x, k * v.y}; }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }

    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Row-major square matrix of exact integers.
using IntMatrix = std::vector<std::vector<Integer>>;

/// u.x*v.y - u.y*v.x
Integer cross(const LatticeVector& u, const LatticeVector& v);

/// Standard pairing between M and N.
Integer pairing(const LatticeVector& m, const LatticeVector& n);

Integer gcd(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws InvalidArgument for non-square input. The empty matrix has determinant 1.
Integer det_n(const IntMatrix& matrix);

/// (1/n!) det of the matrix whose i-th column is columns[i].
/// Throws InvalidArgument unless there are n columns of length n.
Rational signed_simplex_volume(std::span<const std::vector<Integer>> columns);
Rational signed_simplex_volume(const LatticeVector& first, const LatticeVector& second);

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit RationalPoint(const LatticeVector& v) : x(v.x), y(v.y) {}

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

/// Convex polygon with counterclockwise vertices and no collinear interior
/// vertices. Points and segments are allowed (area 0).
class Polygon {
public:
    Polygon() = default;

    /// Takes vertices already in convex counterclockwise position.
    /// Throws InvalidArgument if the shoelace sum is negative.
    explicit Polygon(std::vector<RationalPoint> vertices);

    const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }
    const Rational& area() const noexcept { return area_; }
    bool empty() const noexcept { return vertices_.empty(); }

    Polygon scaled(const Rational& factor) const;

    /// Same vertex cycle, independent of the starting vertex.
    friend bool operator==(const Polygon& a, const Polygon& b);

private:
    std::vector<RationalPoint> vertices_;
    Rational area_{0};
};

std::ostream& operator<<(std::ostream& os, const Polygon& p);

/// Monotone-chain hull; collinear points are dropped. Throws InvalidArgument on empty input.
Polygon convex_hull_2d(std::span<const RationalPoint> points);
Polygon convex_hull_2d(std::span<const LatticeVector> points);

/// Shoelace area recomputed from the vertex list.
Rational polygon_area(const Polygon& p);

}  // namespace toricvol
