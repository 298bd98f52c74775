#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cablefloer/error.hpp"
#include "cablefloer/pattern.hpp"
#include "geometry.hpp"

namespace cablefloer {

namespace geom {

std::vector<Candidate> candidates(const BorderedDiagram& d, SegKey key, Vec2 start, int dx, int dy) {
    std::vector<Candidate> out;
    double N = static_cast<double>(d.period());
    for (size_t g = 0; g < d.gens.size(); ++g) {
        const auto& c = d.gens[g];
        if (c.idem != key.idem) continue;
        long m;
        if (key.idem == 0) {
            if (lfloor(c.pt.x) != key.i) continue;
            m = key.j - lround(c.pt.y);
        } else {
            if (lround(c.pt.x) != key.i) continue;
            m = key.j - lfloor(c.pt.y);
        }
        Vec2 P{c.pt.x, c.pt.y + static_cast<double>(m)};
        double ahead = (P.x - start.x) * dx + (P.y - start.y) * dy;
        if (ahead <= 1e-12) continue;
        out.push_back({g, c.tau + static_cast<double>(m) * N, P});
    }
    return out;
}

std::optional<int64_t> polygon_U(const BorderedDiagram& d, double tx, const std::vector<Vec2>& apath, double Ty) {
    std::vector<Vec2> barc = d.arc(Ty, tx);
    size_t na = apath.size(), nb = barc.size();
    // corners first: cheap rejections
    Vec2 bin{barc[nb - 1].x - barc[nb - 2].x, barc[nb - 1].y - barc[nb - 2].y};
    Vec2 aout{apath[1].x - apath[0].x, apath[1].y - apath[0].y};
    if (bin.x * aout.y - bin.y * aout.x <= 0) return std::nullopt;
    Vec2 ain{apath[na - 1].x - apath[na - 2].x, apath[na - 1].y - apath[na - 2].y};
    Vec2 bout{barc[1].x - barc[0].x, barc[1].y - barc[0].y};
    if (ain.x * bout.y - ain.y * bout.x <= 0) return std::nullopt;

    std::vector<Vec2> poly = apath;
    poly.insert(poly.end(), barc.begin() + 1, barc.end() - 1);
    if (area(poly) <= 0) return std::nullopt;

    for (size_t a = 0; a + 1 < na; ++a)
        for (size_t b = 0; b + 1 < nb; ++b) {
            if (a == 0 && b == nb - 2) continue;
            if (a == na - 2 && b == 0) continue;
            if (seg_inter(apath[a], apath[a + 1], barc[b], barc[b + 1])) return std::nullopt;
        }

    double minx = poly[0].x, maxx = poly[0].x, miny = poly[0].y, maxy = poly[0].y;
    for (auto& v : poly) {
        minx = std::min(minx, v.x);
        maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y);
        maxy = std::max(maxy, v.y);
    }
    std::set<std::pair<long, long>> verts;
    for (size_t k = 1; k + 1 < na; ++k) verts.insert({lround(apath[k].x), lround(apath[k].y)});
    for (long i = lfloor(minx); i <= static_cast<long>(std::ceil(maxx)); ++i)
        for (long j = lfloor(miny); j <= static_cast<long>(std::ceil(maxy)); ++j) {
            if (verts.count({i, j})) continue;
            if (winding(poly, {i + 1.3e-7, j + 0.7e-7}) != 0) return std::nullopt;
        }
    int64_t U = 0;
    for (long i = lfloor(minx) - 1; i <= static_cast<long>(std::ceil(maxx)); ++i)
        for (long j = lfloor(miny) - 1; j <= static_cast<long>(std::ceil(maxy)); ++j)
            if (winding(poly, {i + d.w.x, j + d.w.y}) != 0) ++U;
    return U;
}

}  // namespace geom

namespace {

// Chord from arrival ray `ar` turning `L` quadrants clockwise (rays a0=E, a1=S, a2=W, a3=N).
Chord chord_of(int ar, int L) {
    static const Chord table[3][4] = {{Chord::R1, Chord::R1, Chord::R12, Chord::R123},
                                      {Chord::R2, Chord::R2, Chord::R23, Chord::R23},
                                      {Chord::R3, Chord::R3, Chord::R3, Chord::R3}};
    return table[ar][L];
}

constexpr int kRayDir[4][2] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};

int arrival_ray(int dx, int dy) {
    if (dx == 1) return 2;
    if (dy == 1) return 1;
    if (dx == -1) return 0;
    return 3;
}

struct Search {
    const BorderedDiagram& d;
    const SeqFilter* filter;
    int maxlen;
    std::map<AOp, int> parity;
    bool truncated = false;

    size_t gx = 0;
    double tx = 0;

    void dfs(std::vector<Vec2>& path, geom::SegKey key, int dx, int dy, std::pair<long, long> lat,
             std::vector<Chord>& chords, std::set<std::pair<long, long>>& visited) {
        Vec2 start = path.back();
        if (!filter || filter->full_ok(chords)) {
            for (auto& c : geom::candidates(d, key, start, dx, dy)) {
                path.push_back(c.pt);
                if (auto U = geom::polygon_U(d, tx, path, c.T)) parity[AOp{gx, chords, c.gen, *U}] ^= 1;
                path.pop_back();
            }
        }
        if (visited.count(lat)) return;
        int ar = arrival_ray(dx, dy);
        if (ar == 3) return;  // arriving on the north ray: every turn would cross z
        if (static_cast<int>(chords.size()) >= maxlen) {
            if (!filter || filter->extendable(chords)) truncated = true;
            return;
        }
        visited.insert(lat);
        path.push_back({static_cast<double>(lat.first), static_cast<double>(lat.second)});
        for (int L = 1; ar + L <= 3; ++L) {
            chords.push_back(chord_of(ar, L));
            if (!filter || filter->prefix_ok(chords)) {
                int leave = ar + L;
                int ndx = kRayDir[leave][0], ndy = kRayDir[leave][1];
                geom::SegKey nk = ndx != 0 ? geom::SegKey{0, ndx > 0 ? lat.first : lat.first - 1, lat.second}
                                           : geom::SegKey{1, lat.first, ndy > 0 ? lat.second : lat.second - 1};
                dfs(path, nk, ndx, ndy, {lat.first + ndx, lat.second + ndy}, chords, visited);
            }
            chords.pop_back();
        }
        path.pop_back();
        visited.erase(lat);
    }
};

}  // namespace

int64_t effective_wmult(const Caps& caps, const PatternArithmetic& ar) {
    return caps.wmult > 0 ? caps.wmult : 3 * ar.n_w;
}

TypeAModule enumerate_cfa(const BorderedDiagram& d, const PatternArithmetic& ar, const Caps& caps,
                          const SeqFilter* filter) {
    TypeAModule m;
    m.p = d.p;
    m.q = d.q;
    m.caps = caps;
    for (size_t i = 0; i < d.gens.size(); ++i) {
        m.ids.push_back(d.gen_id(i));
        m.idem.push_back(d.gens[i].idem);
    }
    // the defining sequences of a and b1 are always searched
    SeqFilter with_defining;
    if (filter) {
        static const std::vector<Chord> s32{Chord::R3, Chord::R2}, s321{Chord::R3, Chord::R2, Chord::R1};
        auto is_pre = [](const std::vector<Chord>& s, const std::vector<Chord>& w) {
            return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.begin());
        };
        with_defining.prefix_ok = [filter, is_pre](const std::vector<Chord>& s) {
            return is_pre(s, s321) || filter->prefix_ok(s);
        };
        with_defining.full_ok = [filter](const std::vector<Chord>& s) {
            return s == s32 || s == s321 || filter->full_ok(s);
        };
        with_defining.extendable = filter->extendable;
        filter = &with_defining;
    }
    Search s{d, filter, caps.chordlen, {}, false};
    for (size_t g = 0; g < d.gens.size(); ++g) {
        const auto& c = d.gens[g];
        s.gx = g;
        s.tx = c.tau;
        for (int sgn : {1, -1}) {
            int dx = c.idem == 0 ? sgn : 0, dy = c.idem == 0 ? 0 : sgn;
            geom::SegKey key;
            std::pair<long, long> lat;
            if (c.idem == 0) {
                long i = geom::lfloor(c.pt.x), j = geom::lround(c.pt.y);
                key = {0, i, j};
                lat = sgn > 0 ? std::pair{i + 1, j} : std::pair{i, j};
            } else {
                long i = geom::lround(c.pt.x), j = geom::lfloor(c.pt.y);
                key = {1, i, j};
                lat = sgn > 0 ? std::pair{i, j + 1} : std::pair{i, j};
            }
            std::vector<Vec2> path{c.pt};
            std::vector<Chord> chords;
            std::set<std::pair<long, long>> visited;
            s.dfs(path, key, dx, dy, lat, chords, visited);
        }
    }
    int64_t wm = effective_wmult(caps, ar);
    for (auto& [op, v] : s.parity) {
        if (!v) continue;
        if (op.U > wm) {
            ++m.dropped_by_wmult;
            continue;
        }
        m.ops.push_back(op);
    }
    m.truncated = s.truncated;
    std::sort(m.ops.begin(), m.ops.end());
    // distinguished generators from the defining relations
    std::vector<size_t> as;
    for (auto& op : m.ops)
        if (op.x == op.y && op.chords == std::vector<Chord>{Chord::R3, Chord::R2}) as.push_back(op.x);
    if (as.size() == 1) {
        m.a = as[0];
        std::vector<size_t> bs;
        for (auto& op : m.ops)
            if (op.x == m.a && op.U == 1 && op.chords == std::vector<Chord>{Chord::R3, Chord::R2, Chord::R1})
                bs.push_back(op.y);
        if (bs.size() == 1) m.b1 = bs[0];
        else if (caps.chordlen >= 3) throw Error(ErrorKind::Internal, "m4(a,3,2,1) = U b1 not found uniquely");
    } else if (caps.chordlen >= 2 && (!filter || filter->full_ok({Chord::R3, Chord::R2}))) {
        throw Error(ErrorKind::Internal, "m3(x,3,2) = U^w x not found uniquely (" + std::to_string(as.size()) + ")");
    }
    return m;
}

std::pair<size_t, size_t> distinguished_generators(const BorderedDiagram& d) {
    std::set<std::vector<Chord>> want = {{Chord::R3, Chord::R2}, {Chord::R3, Chord::R2, Chord::R1}};
    SeqFilter f;
    f.full_ok = [&](const std::vector<Chord>& s) { return want.count(s) > 0; };
    f.prefix_ok = [&](const std::vector<Chord>& s) {
        for (auto& w : want)
            if (s.size() <= w.size() && std::equal(s.begin(), s.end(), w.begin())) return true;
        return false;
    };
    f.extendable = [](const std::vector<Chord>&) { return false; };
    PatternArithmetic ar = decompose_pq(d.p, d.q);
    Caps caps{3, 1000000};
    TypeAModule m = enumerate_cfa(d, ar, caps, &f);
    return {m.a, m.b1};
}

}  // namespace cablefloer
