#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code path it is used to check.

#include "toricvol/lattice.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using toricvol::Integer;
using toricvol::IntMatrix;
using toricvol::LatticeVector;
using toricvol::Rational;
using toricvol::RationalPoint;

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        IntMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const Integer term = m[0][col] * cofactor_det(minor);
        total += (col % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline Rational orient(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Gift-wrapping hull, counterclockwise, strictly convex (collinear points dropped).
inline std::vector<RationalPoint> jarvis_hull(std::vector<RationalPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    auto dist2 = [](const RationalPoint& a, const RationalPoint& b) {
        return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
    };
    std::vector<RationalPoint> hull;
    RationalPoint current = pts.front();  // lexicographically smallest is on the hull
    do {
        hull.push_back(current);
        RationalPoint candidate = pts[0] == current ? pts[1] : pts[0];
        for (const auto& p : pts) {
            if (p == current) continue;
            const Rational o = orient(current, candidate, p);
            // Keep the most clockwise point; on ties keep the farthest.
            if (o < 0 || (o == 0 && dist2(current, p) > dist2(current, candidate))) candidate = p;
        }
        current = candidate;
    } while (!(current == hull.front()) && hull.size() <= pts.size());
    return hull;
}

/// Area via a triangle fan from the first vertex.
inline Rational fan_area(const std::vector<RationalPoint>& v) {
    Rational a = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) a += orient(v[0], v[i], v[i + 1]);
    return a / 2;
}

/// Vertices of {h : <h, ray_i> >= -d_i} by brute-force line intersection.
inline std::vector<RationalPoint> halfplane_polytope(const std::vector<LatticeVector>& rays,
                                                     const std::vector<Integer>& d) {
    std::vector<RationalPoint> cand;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t k = 0; k < rays.size(); ++k) {
            Integer det = rays[i].x * rays[k].y - rays[i].y * rays[k].x;
            if (i >= k || det == 0) continue;
            const Integer ci = -d[i], ck = -d[k];
            Integer nx = ci * rays[k].y - ck * rays[i].y, ny = rays[i].x * ck - rays[k].x * ci;
            if (det < 0) {
                det = -det;
                nx = -nx;
                ny = -ny;
            }
            RationalPoint p{Rational(nx, det), Rational(ny, det)};
            bool ok = true;
            for (std::size_t r = 0; r < rays.size(); ++r)
                ok = ok && p.x * rays[r].x + p.y * rays[r].y >= -d[r];
            if (ok) cand.push_back(p);
        }
    }
    return jarvis_hull(cand);
}

/// Pick's theorem: lattice points of a lattice polygon given by its vertices.
inline Integer pick_count(const std::vector<LatticeVector>& v) {
    if (v.size() == 1) return 1;
    Integer boundary = 0;
    Integer twice_area = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        boundary += boost::multiprecision::gcd(abs(q.x - p.x), abs(q.y - p.y));
        twice_area += p.x * q.y - p.y * q.x;
    }
    if (v.size() == 2) return boundary / 2 + 1;
    // A = I + B/2 - 1  =>  I + B = A + B/2 + 1
    return (abs(twice_area) + boundary) / 2 + 1;
}

}  // namespace oracle
