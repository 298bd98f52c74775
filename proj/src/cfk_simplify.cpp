#include <algorithm>
#include <numeric>

#include "cablefloer/cfk.hpp"
#include "cablefloer/error.hpp"
#include "cablefloer/gf2.hpp"

namespace cablefloer {

namespace {

// Differential as F2 columns; U-powers are implied by the Maslov gradings.
struct Dense {
    std::vector<CfkGenerator> gens;
    std::vector<BitVec> d;
};

Dense to_dense(const ModelComplex& c) {
    Dense D{c.gens, std::vector<BitVec>(c.gens.size(), BitVec(c.gens.size()))};
    for (auto& a : c.arrows) D.d[a.src].flip(a.dst);
    return D;
}

ModelComplex from_dense(const Dense& D) {
    ModelComplex c;
    c.gens = D.gens;
    size_t n = D.gens.size();
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (!D.d[x].get(y)) continue;
            int64_t twok = 1 - D.gens[x].M + D.gens[y].M;
            if (twok < 0 || twok % 2 != 0)
                throw Error(ErrorKind::Internal, "basis change produced an inhomogeneous arrow");
            c.arrows.push_back({x, y, twok / 2});
        }
    return c;
}

bool wanted(const Dense& D, size_t x, size_t y, bool horizontal) {
    int64_t k = (1 - D.gens[x].M + D.gens[y].M) / 2;
    if (!horizontal) return k == 0;
    return k > 0 && D.gens[y].A - k == D.gens[x].A;
}

// Persistence-style filtered elimination on the vertical (U^0) or horizontal part,
// followed by rewriting the whole differential in the resulting basis.
Dense eliminate(const Dense& D, bool horizontal) {
    size_t n = D.gens.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return horizontal ? D.gens[a].A > D.gens[b].A : D.gens[a].A < D.gens[b].A;
    });
    std::vector<size_t> pos(n);
    for (size_t p = 0; p < n; ++p) pos[order[p]] = p;

    std::vector<BitVec> R(n, BitVec(n)), W(n, BitVec(n));
    for (size_t x = 0; x < n; ++x) {
        W[x].set(x);
        for (size_t y = 0; y < n; ++y)
            if (D.d[x].get(y) && wanted(D, x, y, horizontal)) R[x].set(pos[y]);
    }
    std::vector<long> owner(n, -1);
    for (size_t p = 0; p < n; ++p) {
        size_t j = order[p];
        while (auto hi = R[j].highest()) {
            long o = owner[*hi];
            if (o < 0) {
                owner[*hi] = static_cast<long>(j);
                break;
            }
            R[j].xor_with(R[static_cast<size_t>(o)]);
            W[j].xor_with(W[static_cast<size_t>(o)]);
        }
    }
    // new basis vectors in old coordinates
    std::vector<BitVec> P(n, BitVec(n));
    for (size_t x = 0; x < n; ++x) {
        if (R[x].any()) {
            P[x] = W[x];
        } else if (owner[pos[x]] >= 0) {
            BitVec v(n);
            const BitVec& r = R[static_cast<size_t>(owner[pos[x]])];
            for (size_t q = 0; q < n; ++q)
                if (r.get(q)) v.set(order[q]);
            P[x] = v;
        } else {
            P[x] = W[x];
        }
    }
    // invert P by Gauss-Jordan: Pinv[y] gives the new-basis coordinates of old generator y
    std::vector<BitVec> A = P, Inv(n, BitVec(n));
    for (size_t i = 0; i < n; ++i) Inv[i].set(i);
    // treat A as a list of columns; reduce columns to the identity
    std::vector<BitVec> rows(n, BitVec(2 * n));
    for (size_t col = 0; col < n; ++col)
        for (size_t r = 0; r < n; ++r)
            if (A[col].get(r)) rows[r].set(col);
    for (size_t r = 0; r < n; ++r) rows[r].set(n + r);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && !rows[piv].get(c)) ++piv;
        if (piv == n) throw Error(ErrorKind::Internal, "singular basis change");
        std::swap(rows[piv], rows[c]);
        for (size_t r = 0; r < n; ++r)
            if (r != c && rows[r].get(c)) rows[r].xor_with(rows[c]);
    }
    // rows[r] now holds [I | P^-1]; entry (r, n+s) = P^-1[r][s]
    Dense out{D.gens, std::vector<BitVec>(n, BitVec(n))};
    for (size_t x = 0; x < n; ++x) {
        BitVec img(n);
        for (size_t y = 0; y < n; ++y)
            if (P[x].get(y)) img.xor_with(D.d[y]);
        for (size_t r = 0; r < n; ++r) {
            int bit = 0;
            for (size_t s = 0; s < n; ++s)
                if (img.get(s) && rows[r].get(n + s)) bit ^= 1;
            if (bit) out.d[x].set(r);
        }
    }
    return out;
}

struct Matching {
    std::vector<BasisPair> pairs;
    std::vector<std::string> unmatched;
    std::vector<std::string> overloaded;
};

Matching matching(const ModelComplex& c, bool horizontal) {
    Matching m;
    std::vector<int> deg(c.gens.size(), 0);
    for (auto& a : c.arrows) {
        bool h = is_horizontal(c, a);
        bool v = is_vertical(c, a);
        if (horizontal ? !h : !v) continue;
        ++deg[a.src];
        ++deg[a.dst];
        int64_t len = horizontal ? a.k : c.gens[a.src].A - c.gens[a.dst].A;
        m.pairs.push_back({c.gens[a.src].id, c.gens[a.dst].id, len});
    }
    for (size_t i = 0; i < c.gens.size(); ++i) {
        if (deg[i] == 0) m.unmatched.push_back(c.gens[i].id);
        if (deg[i] > 1) m.overloaded.push_back(c.gens[i].id);
    }
    return m;
}

std::optional<SimplifiedBasis> as_basis(const ModelComplex& c, bool horizontal) {
    Matching m = matching(c, horizontal);
    if (!m.overloaded.empty() || m.unmatched.size() != 1) return std::nullopt;
    SimplifiedBasis b;
    b.direction = horizontal ? SimplifiedBasis::Direction::Horizontal : SimplifiedBasis::Direction::Vertical;
    b.pairs = m.pairs;
    b.distinguished = m.unmatched[0];
    return b;
}

}  // namespace

SimplifiedBasis simplify_vertical(const ModelComplex& c) {
    require_valid(c);
    ModelComplex r = from_dense(eliminate(to_dense(c), false));
    auto b = as_basis(r, false);
    if (!b) throw Error(ErrorKind::Internal, "vertical elimination did not produce a simplified basis");
    return *b;
}

SimplifiedBasis simplify_horizontal(const ModelComplex& c) {
    require_valid(c);
    ModelComplex r = from_dense(eliminate(to_dense(c), true));
    auto b = as_basis(r, true);
    if (!b) throw Error(ErrorKind::Internal, "horizontal elimination did not produce a simplified basis");
    return *b;
}

SimultaneousBasis simultaneous_basis(const ModelComplex& c) {
    require_valid(c);
    const std::vector<std::vector<int>> plans = {{}, {0}, {1}, {0, 1}, {1, 0}};
    ModelComplex last = c;
    for (auto& plan : plans) {
        Dense D = to_dense(c);
        std::string steps;
        for (int h : plan) {
            D = eliminate(D, h == 1);
            steps += steps.empty() ? "" : ",";
            steps += h ? "horizontal" : "vertical";
        }
        ModelComplex r = from_dense(D);
        if (!validate_complex(r).ok()) throw Error(ErrorKind::Internal, "basis change broke the complex");
        last = r;
        auto v = as_basis(r, false);
        auto hb = as_basis(r, true);
        if (v && hb) return {r, *v, *hb, steps.empty() ? "none" : steps};
    }
    Matching mv = matching(last, false), mh = matching(last, true);
    std::string msg = "no simultaneously simplified basis found; obstructing generators:";
    for (auto& s : mv.overloaded) msg += " " + s + "(vertical)";
    for (auto& s : mh.overloaded) msg += " " + s + "(horizontal)";
    if (mv.overloaded.empty() && mh.overloaded.empty())
        for (auto& s : mh.unmatched) msg += " " + s + "(unpaired)";
    throw Error(ErrorKind::Domain, msg);
}

int64_t tau(const ModelComplex& c) {
    auto b = simplify_vertical(c);
    return c.gens[c.index(b.distinguished)].A;
}

namespace {

bool hook_surjects(const ModelComplex& c, int64_t s) {
    size_t n = c.gens.size();
    std::vector<std::pair<size_t, int64_t>> elems;
    std::map<std::pair<size_t, int64_t>, size_t> at;
    for (size_t x = 0; x < n; ++x) {
        int64_t A = c.gens[x].A;
        if (A <= s) {
            at[{x, 0}] = elems.size();
            elems.push_back({x, 0});
        }
        if (A > s) {
            at[{x, A - s}] = elems.size();
            elems.push_back({x, A - s});
        }
    }
    size_t E = elems.size();
    std::vector<BitVec> cols(E, BitVec(E));
    for (size_t e = 0; e < E; ++e) {
        auto [x, u] = elems[e];
        for (auto& a : c.arrows) {
            if (a.src != x) continue;
            auto it = at.find({a.dst, u + a.k});
            if (it != at.end()) cols[e].flip(it->second);
        }
    }
    EchelonBasis boundaries(n);
    for (size_t x = 0; x < n; ++x) {
        BitVec v(n);
        for (auto& a : c.arrows)
            if (a.src == x && a.k == 0) v.flip(a.dst);
        boundaries.insert(v);
    }
    for (auto& z : gf2_kernel(cols, E)) {
        BitVec proj(n);
        for (size_t e = 0; e < E; ++e)
            if (z.get(e) && elems[e].second == 0) proj.flip(elems[e].first);
        if (proj.any() && !boundaries.contains(proj)) return true;
    }
    return false;
}

}  // namespace

int64_t nu(const ModelComplex& c) {
    require_valid(c);
    int64_t lo = 0, hi = 0;
    for (auto& g : c.gens) {
        lo = std::min(lo, g.A);
        hi = std::max(hi, g.A);
    }
    for (int64_t s = lo - 1; s <= hi + 1; ++s)
        if (hook_surjects(c, s)) return s;
    throw Error(ErrorKind::Internal, "nu: projection never surjective");
}

int epsilon_structural(const ModelComplex& c) {
    auto sb = simultaneous_basis(c);
    const std::string& xi0 = sb.vertical.distinguished;
    for (auto& p : sb.horizontal.pairs) {
        if (p.dst == xi0) return 1;
        if (p.src == xi0) return -1;
    }
    return 0;
}

int epsilon(const ModelComplex& c) {
    ModelComplex m = mirror(c);
    int64_t t = tau(c), n = nu(c), tm = tau(m), nm = nu(m);
    bool neg = n == t + 1, pos = nm == tm + 1;
    if (neg && pos) throw Error(ErrorKind::Internal, "epsilon: nu criteria contradict each other");
    int e = neg ? -1 : (pos ? 1 : 0);
    int es;
    try {
        es = epsilon_structural(c);
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::Domain) return e;  // no simultaneous basis to compare with
        throw;
    }
    if (es != e)
        throw Error(ErrorKind::Internal, "epsilon mismatch: nu-based " + std::to_string(e) + " vs structural " +
                                             std::to_string(es));
    return e;
}

}  // namespace cablefloer
