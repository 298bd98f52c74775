#pragma once
// Planar helpers shared by diagram synthesis and polygon enumeration.
#include <cmath>
#include <optional>
#include <vector>

#include "cablefloer/pattern.hpp"

namespace cablefloer::geom {

inline double cross(Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool seg_inter(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
        return false;
    double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

inline int winding(const std::vector<Vec2>& poly, Vec2 pt) {
    int wn = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % n];
        if ((a.y <= pt.y && pt.y < b.y) || (b.y <= pt.y && pt.y < a.y)) {
            double xi = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xi > pt.x) wn += b.y > a.y ? 1 : -1;
        }
    }
    return wn;
}

inline double area(const std::vector<Vec2>& poly) {
    double s = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return s / 2;
}

std::vector<Crossing> crossings(const std::vector<Vec2>& pts);

struct Candidate {
    size_t gen;
    double T;
    Vec2 pt;
};

// Unit segment of an alpha line: idem 0 -> [i,i+1] x {j}; idem 1 -> {i} x [j,j+1].
struct SegKey {
    int idem;
    long i, j;
};

// Crossings of the same beta lift on the segment, strictly ahead of `start` in direction (dx,dy).
std::vector<Candidate> candidates(const BorderedDiagram& d, SegKey key, Vec2 start, int dx, int dy);

// Validates the polygon bounded by the alpha path (from x to y) and the beta arc back from y to x.
// Returns the w-multiplicity when it is an embedded positive polygon avoiding z.
std::optional<int64_t> polygon_U(const BorderedDiagram& d, double tx, const std::vector<Vec2>& apath, double Ty);

inline long lfloor(double v) { return static_cast<long>(std::floor(v)); }
inline long lround(double v) { return static_cast<long>(std::llround(v)); }

}  // namespace cablefloer::geom
