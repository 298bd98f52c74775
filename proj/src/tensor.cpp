#include <algorithm>
#include <limits>
#include <memory>
#include <set>

#include "cablefloer/error.hpp"
#include "cablefloer/gf2.hpp"
#include "cablefloer/tensor.hpp"

namespace cablefloer {

size_t UComplex::index(const std::string& id) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].id == id) return i;
    throw Error(ErrorKind::Internal, "no tensor generator " + id);
}

DPaths d_paths(const TypeDModule& d, int maxlen) {
    DPaths out;
    out.maxlen = maxlen;
    std::vector<std::vector<const DArrow*>> from(d.gens.size());
    for (auto& a : d.arrows) from[a.src].push_back(&a);
    struct Walk {
        size_t start, at;
        std::vector<Chord> labels;
    };
    std::vector<Walk> frontier;
    for (size_t y = 0; y < d.gens.size(); ++y) frontier.push_back({y, y, {}});
    for (int len = 1; !frontier.empty(); ++len) {
        std::vector<Walk> next;
        for (auto& w : frontier)
            for (auto* a : from[w.at]) {
                if (len > maxlen) {
                    out.longer_exist = true;
                    continue;
                }
                Walk v{w.start, a->dst, w.labels};
                v.labels.push_back(a->label);
                out.paths[v.labels][{v.start, v.at}] ^= 1;
                next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    for (auto it = out.paths.begin(); it != out.paths.end();) {
        std::erase_if(it->second, [](const auto& kv) { return kv.second == 0; });
        it = it->second.empty() ? out.paths.erase(it) : std::next(it);
    }
    return out;
}

SeqFilter DPaths::filter() const {
    // prefixes of any path label, and prefixes of labels at the length cap (those may continue)
    auto prefixes = std::make_shared<std::set<std::vector<Chord>>>();
    auto at_cap = std::make_shared<std::set<std::vector<Chord>>>();
    auto full = std::make_shared<std::set<std::vector<Chord>>>();
    for (auto& [s, ends] : paths) {
        full->insert(s);
        for (size_t k = 0; k <= s.size(); ++k) {
            std::vector<Chord> pre(s.begin(), s.begin() + static_cast<long>(k));
            if (longer_exist && s.size() == static_cast<size_t>(maxlen)) at_cap->insert(pre);
            prefixes->insert(std::move(pre));
        }
    }
    SeqFilter f;
    f.prefix_ok = [prefixes](const std::vector<Chord>& s) { return prefixes->count(s) > 0; };
    f.full_ok = [full](const std::vector<Chord>& s) { return s.empty() || full->count(s) > 0; };
    f.extendable = [at_cap](const std::vector<Chord>& s) { return at_cap->count(s) > 0; };
    return f;
}

UComplex box_tensor(const TypeAModule& a, const TypeDModule& d, const DPaths& paths) {
    UComplex c;
    std::map<std::pair<size_t, size_t>, size_t> at;
    for (size_t x = 0; x < a.ids.size(); ++x)
        for (size_t y = 0; y < d.gens.size(); ++y)
            if (a.idem[x] == d.gens[y].idem) {
                at[{x, y}] = c.gens.size();
                c.gens.push_back({x, y, a.ids[x] + "|" + d.gens[y].id, {}});
            }
    std::map<TensorArrow, int> par;
    for (auto& op : a.ops) {
        if (op.chords.empty()) {
            for (size_t y = 0; y < d.gens.size(); ++y) {
                auto s = at.find({op.x, y}), t = at.find({op.y, y});
                if (s != at.end() && t != at.end()) par[{s->second, t->second, op.U}] ^= 1;
            }
            continue;
        }
        auto it = paths.paths.find(op.chords);
        if (it == paths.paths.end()) continue;
        for (auto& [ends, v] : it->second) {
            auto s = at.find({op.x, ends.first}), t = at.find({op.y, ends.second});
            if (s == at.end() || t == at.end()) continue;
            par[{s->second, t->second, op.U}] ^= v;
        }
    }
    for (auto& [arrow, v] : par)
        if (v) c.arrows.push_back(arrow);
    return c;
}

void attach_gradings(UComplex& c, const GradedTypeA& ga, const GradedTypeD& gd) {
    for (auto& g : c.gens) g.cg = coset_reduce(gr_compose(ga.gr[g.x], gd.gr[g.y]), ga.period, gd.period);
    c.graded = true;
}

TensorReport check_d_squared(const UComplex& c) {
    TensorReport rep;
    std::vector<std::vector<const TensorArrow*>> from(c.gens.size());
    for (auto& a : c.arrows) from[a.src].push_back(&a);
    for (size_t s = 0; s < c.gens.size(); ++s) {
        std::map<std::pair<size_t, int64_t>, int> acc;
        for (auto* a : from[s])
            for (auto* b : from[a->dst]) acc[{b->dst, a->U + b->U}] ^= 1;
        for (auto& [k, v] : acc)
            if (v)
                rep.issues.push_back("d^2(" + c.gens[s].id + ") contains U^" + std::to_string(k.second) + " " +
                                     c.gens[k.first].id);
    }
    return rep;
}

TensorReport check_grading_drops(const UComplex& c) {
    TensorReport rep;
    if (!c.graded) throw Error(ErrorKind::Internal, "ungraded tensor complex");
    for (auto& a : c.arrows) {
        auto& s = c.gens[a.src].cg;
        auto& t = c.gens[a.dst].cg;
        if (s.a != t.a + 1 || s.b != t.b + a.U)
            rep.issues.push_back(c.gens[a.src].id + " -> U^" + std::to_string(a.U) + " " + c.gens[a.dst].id +
                                 ": (" + std::to_string(s.a) + "," + std::to_string(s.b) + ") to (" +
                                 std::to_string(t.a) + "," + std::to_string(t.b) + ")");
    }
    return rep;
}

namespace {

// Homology of a complex graded by `level` (differential lowers it by one) and split into
// blocks the differential preserves; returns rank per (block, level).
template <class Key>
std::map<Key, int64_t> graded_homology(const UComplex& c, const std::vector<Key>& key,
                                       const std::vector<TensorArrow>& arrows) {
    std::map<Key, std::vector<size_t>> cells;
    for (size_t i = 0; i < c.gens.size(); ++i) cells[key[i]].push_back(i);
    std::vector<size_t> pos(c.gens.size());
    for (auto& [k, v] : cells)
        for (size_t j = 0; j < v.size(); ++j) pos[v[j]] = j;
    // columns of the map out of each cell
    std::map<Key, std::vector<BitVec>> cols;
    std::map<Key, Key> target;
    for (auto& [k, v] : cells) cols[k] = {};
    for (auto& a : arrows) {
        const Key& ks = key[a.src];
        const Key& kt = key[a.dst];
        auto& cl = cols[ks];
        if (cl.empty()) {
            cl.assign(cells[ks].size(), BitVec(cells[kt].size()));
            target[ks] = kt;
        } else if (target[ks] != kt) {
            throw Error(ErrorKind::Internal, "differential does not respect the grading blocks");
        }
        cl[pos[a.src]].flip(pos[a.dst]);
    }
    std::map<Key, int64_t> rank_out, rank_in;
    for (auto& [k, cl] : cols) {
        if (cl.empty()) continue;
        int64_t rk = static_cast<int64_t>(gf2_rank(cl, cells[target[k]].size()));
        rank_out[k] = rk;
        rank_in[target[k]] += rk;
    }
    std::map<Key, int64_t> h;
    for (auto& [k, v] : cells) {
        int64_t r = static_cast<int64_t>(v.size()) - rank_out[k] - rank_in[k];
        if (r < 0) throw Error(ErrorKind::Internal, "negative homology rank");
        if (r) h[k] = r;
    }
    return h;
}

}  // namespace

RankTable hfk_hat_raw(const UComplex& c) {
    if (!c.graded) throw Error(ErrorKind::Internal, "hfk_hat needs a graded complex");
    std::vector<std::pair<int64_t, int64_t>> key;
    for (auto& g : c.gens) key.push_back({g.cg.a, g.cg.b});
    std::vector<TensorArrow> u0;
    for (auto& a : c.arrows)
        if (a.U == 0) u0.push_back(a);
    return graded_homology(c, key, u0);
}

std::map<int64_t, int64_t> u1_homology(const UComplex& c) {
    if (!c.graded) throw Error(ErrorKind::Internal, "u1_homology needs a graded complex");
    std::vector<int64_t> key;
    for (auto& g : c.gens) key.push_back(g.cg.a);
    // arrows differing only in U collapse together
    std::map<std::pair<size_t, size_t>, int> par;
    for (auto& a : c.arrows) par[{a.src, a.dst}] ^= 1;
    std::vector<TensorArrow> arrows;
    for (auto& [e, v] : par)
        if (v) arrows.push_back({e.first, e.second, 0});
    return graded_homology(c, key, arrows);
}

Normalization normalization_for(const UComplex& c, const RankTable& raw) {
    auto h1 = u1_homology(c);
    int64_t total = 0;
    for (auto& [a, r] : h1) total += r;
    if (total != 1)
        throw Error(ErrorKind::Invalid, "U=1 homology has rank " + std::to_string(total) + ", expected 1");
    if (raw.empty()) throw Error(ErrorKind::Invalid, "empty hat homology");
    Normalization nz;
    nz.a_star = h1.begin()->first;
    int64_t lo = raw.begin()->first.second, hi = lo;
    for (auto& [k, r] : raw) {
        lo = std::min(lo, k.second);
        hi = std::max(hi, k.second);
    }
    if ((lo + hi) % 2 != 0) throw Error(ErrorKind::Invalid, "Alexander support cannot be centred");
    nz.d0 = (lo + hi) / 2;
    return nz;
}

std::pair<int64_t, int64_t> normalize_one(const CanonicalGrading& cg, const Normalization& nz) {
    int64_t A = nz.d0 - cg.b;
    int64_t N = cg.a - nz.a_star;
    return {A, N + 2 * A};
}

RankTable normalize_gradings(const RankTable& raw, const Normalization& nz) {
    RankTable out;
    for (auto& [k, r] : raw) out[normalize_one({k.first, k.second}, nz)] += r;
    return out;
}

Laurent euler_poly(const RankTable& ranks) {
    Laurent p;
    for (auto& [k, r] : ranks) p.add_term((k.second % 2 == 0) ? r : -r, k.first);
    return p;
}

bool rank_symmetric(const RankTable& ranks) {
    for (auto& [k, r] : ranks) {
        auto it = ranks.find({-k.first, k.second - 2 * k.first});
        if (it == ranks.end() || it->second != r) return false;
    }
    return true;
}

bool verify_cycle_nonzero(const UComplex& c, size_t elt) {
    for (auto& a : c.arrows) {
        if (a.src == elt && a.U == 0) return false;
        if (a.dst == elt && a.U == 0) return false;
    }
    return true;
}

CableResult compute_cable(const ModelComplex& k, int64_t p, int64_t q, int64_t r, const Caps& caps) {
    CableResult res;
    res.ar = decompose_pq(p, q);
    res.D = build_cfd(k, r);
    res.gD = grade_cfd(res.D);
    BorderedDiagram diag = build_diagram(p, q);
    DPaths paths = d_paths(res.D, caps.chordlen);
    SeqFilter f = paths.filter();
    // enumerate without the U cap so demanded operations above it can be reported, not silently lost
    res.A = enumerate_cfa(diag, res.ar, Caps{caps.chordlen, std::numeric_limits<int64_t>::max()}, &f);
    res.A.caps = caps;
    res.chordlen_used = caps.chordlen;
    int64_t wm = effective_wmult(caps, res.ar);
    size_t longest = 0;
    for (auto& op : res.A.ops) {
        if (!op.chords.empty() && !paths.paths.count(op.chords)) continue;
        longest = std::max(longest, op.chords.size());
        if (op.U > wm)
            throw Error(ErrorKind::Budget, "demanded operation with U^" + std::to_string(op.U) +
                                               " exceeds the w-multiplicity cap " + std::to_string(wm) +
                                               "; raise it with --caps wmult=N");
    }
    // Paths through cycles of the type D module always reach the cap. The search is accepted when
    // the operations it found stop at least two chords short of it.
    if (res.A.truncated && static_cast<int>(longest) + 2 > caps.chordlen)
        throw Error(ErrorKind::Budget, "chord-length cap " + std::to_string(caps.chordlen) +
                                           " cuts off demanded operations; raise it with --caps chordlen=N");
    // a short unfiltered enumeration already connects every generator to a
    res.gA = grade_cfa(enumerate_cfa(diag, res.ar, Caps{std::min(caps.chordlen, 4), 1000000}), res.ar);
    res.C = box_tensor(res.A, res.D, paths);
    attach_gradings(res.C, res.gA, res.gD);
    res.raw = hfk_hat_raw(res.C);
    res.nz = normalization_for(res.C, res.raw);
    res.hfk = normalize_gradings(res.raw, res.nz);
    res.euler = euler_poly(res.hfk);
    return res;
}

}  // namespace cablefloer
