#include "toricvol/lattice.hpp"

#include "toricvol/error.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <sstream>

namespace toricvol {

std::string LatticeVector::str() const {
    return "(" + x.str() + "," + y.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

Rational make_rational(Integer n, Integer d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

Integer cross(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

Integer pairing(const LatticeVector& m, const LatticeVector& n) { return m.x * n.x + m.y * n.y; }

Integer gcd(const LatticeVector& v) { return boost::multiprecision::gcd(abs(v.x), abs(v.y)); }

bool is_primitive(const LatticeVector& v) { return gcd(v) == 1; }

Integer det_n(const IntMatrix& matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n) throw InvalidArgument("det_n: matrix is not square");
    if (n == 0) return 1;

    // Bareiss: every intermediate division is exact.
    IntMatrix a = matrix;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rational signed_simplex_volume(std::span<const std::vector<Integer>> columns) {
    const std::size_t n = columns.size();
    IntMatrix m(n, std::vector<Integer>(n));
    Integer factorial = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != n)
            throw InvalidArgument("signed_simplex_volume: expected " + std::to_string(n) +
                                  " vectors of length " + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = columns[j][i];
        factorial *= static_cast<unsigned>(j + 1);
    }
    return Rational(det_n(m), factorial);
}

Rational signed_simplex_volume(const LatticeVector& first, const LatticeVector& second) {
    return Rational(cross(first, second), 2);
}

std::string RationalPoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) { return os << p.str(); }

namespace {

template <class Point>
auto orient(const Point& o, const Point& a, const Point& b) -> std::remove_cvref_t<decltype(o.x)> {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational shoelace(const std::vector<RationalPoint>& v) {
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        twice += p.x * q.y - p.y * q.x;
    }
    return twice / 2;
}

template <class Point>
std::vector<Point> monotone_chain(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

Polygon::Polygon(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
    area_ = shoelace(vertices_);
    if (area_ < 0) throw InvalidArgument("Polygon: vertices are clockwise");
}

Polygon Polygon::scaled(const Rational& factor) const {
    std::vector<RationalPoint> v;
    v.reserve(vertices_.size());
    for (const auto& p : vertices_) v.emplace_back(p.x * factor, p.y * factor);
    if (factor < 0) return convex_hull_2d(v);
    return Polygon(std::move(v));
}

bool operator==(const Polygon& a, const Polygon& b) {
    if (a.vertices_.size() != b.vertices_.size()) return false;
    if (a.vertices_.empty()) return true;
    const auto start = std::find(b.vertices_.begin(), b.vertices_.end(), a.vertices_.front());
    if (start == b.vertices_.end()) return false;
    const std::size_t offset = static_cast<std::size_t>(start - b.vertices_.begin());
    const std::size_t n = a.vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a.vertices_[i] != b.vertices_[(i + offset) % n]) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Polygon& p) {
    os << "[";
    for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? " " : "") << p.vertices()[i];
    return os << "] area " << p.area();
}

Polygon convex_hull_2d(std::span<const RationalPoint> points) {
    if (points.empty()) throw InvalidArgument("convex_hull_2d: empty point set");
    return Polygon(monotone_chain(std::vector<RationalPoint>(points.begin(), points.end())));
}

Polygon convex_hull_2d(std::span<const LatticeVector> points) {
    if (points.empty()) throw InvalidArgument("convex_hull_2d: empty point set");
    auto hull = monotone_chain(std::vector<LatticeVector>(points.begin(), points.end()));
    std::vector<RationalPoint> v;
    v.reserve(hull.size());
    for (const auto& p : hull) v.emplace_back(p);
    return Polygon(std::move(v));
}

Rational polygon_area(const Polygon& p) { return shoelace(p.vertices()); }

}  // namespace toricvol
