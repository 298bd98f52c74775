#include <algorithm>
#include <cmath>
#include <numeric>

#include "cablefloer/error.hpp"
#include "cablefloer/pattern.hpp"
#include "geometry.hpp"

namespace cablefloer {

PatternArithmetic decompose_pq(int64_t p, int64_t q) {
    if (q < 2 || q >= p || std::gcd(p, q) != 1)
        throw Error(ErrorKind::Unsupported, "pattern needs coprime p > q >= 2, got (" + std::to_string(p) + "," +
                                                std::to_string(q) + ")");
    // q x = 1 (mod p) with 1 <= x < p, then u = (q x - 1) / p
    int64_t x = 1;
    while ((q * x) % p != 1) ++x;
    PatternArithmetic a;
    a.p = p;
    a.q = q;
    a.x = x;
    a.y = p - x;
    a.u = (q * x - 1) / p;
    a.v = q - a.u;
    a.n_w = a.v * a.x + 1;
    a.winding = p;
    return a;
}

Vec2 BorderedDiagram::point(double T) const {
    double N = static_cast<double>(period());
    double m = std::floor(T / N);
    double t = T - m * N;
    size_t i = std::min(static_cast<size_t>(t), period() - 1);
    double f = t - static_cast<double>(i);
    const Vec2& a = pts[i];
    const Vec2& b = pts[i + 1];
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y) + m};
}

std::vector<Vec2> BorderedDiagram::arc(double T1, double T2) const {
    std::vector<Vec2> res{point(T1)};
    if (T2 > T1) {
        for (double k = std::floor(T1) + 1; k < T2; k += 1) res.push_back(point(k));
    } else {
        for (double k = std::ceil(T1) - 1; k > T2; k -= 1) res.push_back(point(k));
    }
    res.push_back(point(T2));
    return res;
}

namespace geom {

std::vector<Crossing> crossings(const std::vector<Vec2>& pts) {
    std::vector<Crossing> out;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Vec2 a = pts[i], b = pts[i + 1];
        double lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
        if (a.x != b.x)
            for (long k = lfloor(lo) + 1; k <= lfloor(hi); ++k) {
                double kk = static_cast<double>(k);
                if (lo < kk && kk <= hi) {
                    double f = (kk - a.x) / (b.x - a.x);
                    out.push_back({static_cast<double>(i) + f, 1, {kk, a.y + f * (b.y - a.y)}});
                }
            }
        lo = std::min(a.y, b.y);
        hi = std::max(a.y, b.y);
        if (a.y != b.y)
            for (long k = lfloor(lo) + 1; k <= lfloor(hi); ++k) {
                double kk = static_cast<double>(k);
                if (lo < kk && kk <= hi) {
                    double f = (kk - a.y) / (b.y - a.y);
                    out.push_back({static_cast<double>(i) + f, 0, {a.x + f * (b.x - a.x), kk}});
                }
            }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& u, const Crossing& v) {
        if (u.tau != v.tau) return u.tau < v.tau;
        return u.idem < v.idem;
    });
    return out;
}

}  // namespace geom

namespace {

constexpr double kC = 0.1;

// beta0 = {x = c} pushed along the (p,q) curve by nested fingers that wrap around w.
std::vector<Vec2> finger_polyline(int64_t p, int64_t q, Vec2& w) {
    double P = static_cast<double>(p), Q = static_cast<double>(q);
    double L = std::hypot(P, Q);
    Vec2 nh{-Q / L, P / L}, vh{P / L, Q / L};
    double eps = std::min(0.3 / L / L, 0.5 * kC / P);
    double dmax = std::min(0.2 / L, 0.6 * eps * L);
    struct Cr {
        double y;
        int64_t j;
        double s;
    };
    std::vector<Cr> cr;
    for (int64_t j = 0; j < p; ++j) {
        double s = (kC + static_cast<double>(j)) / P;
        double y = Q * s - std::floor(Q * s);
        cr.push_back({y, j, s});
    }
    std::sort(cr.begin(), cr.end(), [](const Cr& a, const Cr& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.j < b.j;
    });
    size_t n = cr.size();
    std::vector<double> gaps(n);
    for (size_t i = 0; i < n; ++i) {
        double g = cr[(i + 1) % n].y - cr[i].y;
        gaps[i] = g - std::floor(g);
    }
    size_t i0 = 0;
    for (size_t i = 1; i < n; ++i)
        if (gaps[i] > gaps[i0]) i0 = i;
    double ystart = cr[i0].y + gaps[i0] / 2;
    std::vector<Vec2> pts{{kC, ystart}};
    for (size_t k = 0; k < n; ++k) {
        Cr c = cr[(i0 + 1 + k) % n];
        double y = c.y < ystart ? c.y + 1.0 : c.y;
        double s = c.s;
        double d = dmax * static_cast<double>(p - c.j) / (P + 1);
        auto Cs = [&](double t) { return Vec2{kC + (t - s) * P, y + (t - s) * Q}; };
        double sm = s - d * Q / (P * L), sp = s + d * Q / (P * L);
        Vec2 a = Cs(sm);
        pts.push_back({a.x - d * nh.x, a.y - d * nh.y});
        a = Cs(eps);
        pts.push_back({a.x - d * nh.x, a.y - d * nh.y});
        Vec2 ctr = Cs(eps);
        for (int k2 = 1; k2 < 12; ++k2) {
            double th = M_PI * k2 / 12;
            double dx = -std::cos(th) * nh.x - std::sin(th) * vh.x;
            double dy = -std::cos(th) * nh.y - std::sin(th) * vh.y;
            pts.push_back({ctr.x + d * dx, ctr.y + d * dy});
        }
        pts.push_back({ctr.x + d * nh.x, ctr.y + d * nh.y});
        a = Cs(sp);
        pts.push_back({a.x + d * nh.x, a.y + d * nh.y});
    }
    pts.push_back({kC, ystart + 1.0});
    w = {eps * P, eps * Q};
    return pts;
}

std::vector<Vec2> rebase(const std::vector<Vec2>& pts, double T) {
    BorderedDiagram tmp;
    tmp.pts = pts;
    double N = static_cast<double>(tmp.period());
    std::vector<Vec2> out{tmp.point(T)};
    for (double k = std::floor(T) + 1; k < T + N; k += 1) out.push_back(tmp.point(k));
    out.push_back(tmp.point(T + N));
    return out;
}

struct Bigon {
    double tx, Ty;
    Vec2 Px, Py;
    int idem;
};

std::vector<Bigon> empty_bigons(const BorderedDiagram& d) {
    std::vector<Bigon> res;
    for (const auto& g : d.gens) {
        for (int sgn : {1, -1}) {
            int dx = g.idem == 0 ? sgn : 0, dy = g.idem == 0 ? 0 : sgn;
            geom::SegKey key = g.idem == 0 ? geom::SegKey{0, geom::lfloor(g.pt.x), geom::lround(g.pt.y)}
                                           : geom::SegKey{1, geom::lround(g.pt.x), geom::lfloor(g.pt.y)};
            for (auto& c : geom::candidates(d, key, g.pt, dx, dy)) {
                auto U = geom::polygon_U(d, g.tau, {g.pt, c.pt}, c.T);
                if (U && *U == 0) res.push_back({g.tau, c.T, g.pt, c.pt, g.idem});
            }
        }
    }
    return res;
}

bool reduce_once(BorderedDiagram& d) {
    auto bs = empty_bigons(d);
    if (bs.empty()) return false;
    for (const auto& b : bs) {
        auto along = [&](Vec2 v) { return b.idem == 0 ? v.x : v.y; };
        double lo = std::min(along(b.Px), along(b.Py)), hi = std::max(along(b.Px), along(b.Py));
        bool other = false;
        for (const auto& g : d.gens) {
            if (g.idem != b.idem) continue;
            double fx = along(g.pt) - along(b.Px);
            fx -= std::floor(fx);
            for (int k = -3; k <= 3; ++k) {
                double v = along(b.Px) + fx + k;
                if (lo + 1e-12 < v && v < hi - 1e-12) other = true;
            }
        }
        if (other) continue;
        double T1 = std::min(b.tx, b.Ty), T2 = std::max(b.tx, b.Ty);
        double N = static_cast<double>(d.period());
        double start = std::ceil(T2 + 1e-9);
        if (!(start < T1 + N)) throw Error(ErrorKind::Internal, "bigon spans a full period");
        std::vector<Vec2> pts = rebase(d.pts, start);
        double a = T1 - start + N, bb = T2 - start + N;
        auto P = [&](double t) {
            size_t i = std::min(static_cast<size_t>(t), pts.size() - 2);
            double f = t - static_cast<double>(i);
            return Vec2{pts[i].x + f * (pts[i + 1].x - pts[i].x), pts[i].y + f * (pts[i + 1].y - pts[i].y)};
        };
        Vec2 pa = P(a), pb = P(bb);
        double eta = 1e-3 * std::min(1.0, bb - a);
        Vec2 pfar = P(a - eta);
        // push the replacement arc to the side of alpha that beta approaches from
        bool perp_y = b.idem == 0;
        double far = perp_y ? pfar.y : pfar.x, at = perp_y ? pa.y : pa.x;
        double sgn = far > at ? 1.0 : -1.0;
        double off = std::abs(far - at) * 0.5;
        Vec2 q1 = pa, q2 = pb;
        if (perp_y) {
            q1.y += sgn * off;
            q2.y += sgn * off;
        } else {
            q1.x += sgn * off;
            q2.x += sgn * off;
        }
        std::vector<Vec2> np;
        for (size_t i = 0; i < pts.size(); ++i)
            if (static_cast<double>(i) < a - eta) np.push_back(pts[i]);
        np.push_back(pfar);
        np.push_back(q1);
        np.push_back(q2);
        np.push_back(P(bb + eta));
        for (size_t i = 0; i < pts.size(); ++i)
            if (static_cast<double>(i) > bb + eta) np.push_back(pts[i]);
        d.pts = std::move(np);
        d.gens = geom::crossings(d.pts);
        return true;
    }
    throw Error(ErrorKind::Internal, "no innermost empty bigon among " + std::to_string(bs.size()));
}

}  // namespace

BorderedDiagram build_diagram(int64_t p, int64_t q) {
    decompose_pq(p, q);
    BorderedDiagram d;
    d.p = p;
    d.q = q;
    d.pts = finger_polyline(p, q, d.w);
    d.gens = geom::crossings(d.pts);
    while (reduce_once(d)) {
        ++d.bigons_removed;
        if (d.bigons_removed > 100000) throw Error(ErrorKind::Internal, "bigon reduction does not terminate");
    }
    return d;
}

}  // namespace cablefloer
