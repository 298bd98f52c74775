#pragma once
// Independent reference arithmetic for tests: the grading group over exact rationals
// (numerator/denominator pairs), written without the library's doubled encoding.
#include <cstdint>
#include <numeric>

#include "cablefloer/algebra.hpp"

namespace oracle {

struct Q {
    int64_t n = 0, d = 1;
    Q(int64_t a = 0, int64_t b = 1) : n(a), d(b) { norm(); }
    void norm() {
        if (d < 0) { n = -n; d = -d; }
        int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }
    Q operator+(Q o) const { return Q(n * o.d + o.n * d, d * o.d); }
    Q operator-(Q o) const { return Q(n * o.d - o.n * d, d * o.d); }
    Q operator*(Q o) const { return Q(n * o.n, d * o.d); }
    bool operator==(const Q& o) const { return n == o.n && d == o.d; }
};

struct G {
    Q m, i, j;
    int64_t u = 0;
};

inline G mul(const G& a, const G& b) {
    return {a.m + b.m + (a.i * b.j - b.i * a.j), a.i + b.i, a.j + b.j, a.u + b.u};
}

inline G from(const cablefloer::Grading& g) { return {Q(g.m2, 2), Q(g.i2, 2), Q(g.j2, 2), g.n}; }

inline bool same(const G& a, const cablefloer::Grading& g) {
    G b = from(g);
    return a.m == b.m && a.i == b.i && a.j == b.j && a.u == b.u;
}

}  // namespace oracle
