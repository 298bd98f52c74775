#include <deque>
#include <map>
#include <set>

#include "cablefloer/error.hpp"
#include "cablefloer/pattern.hpp"

namespace cablefloer {

std::vector<ClosedRelation> distinguished_relations(int64_t p, int64_t q) {
    PatternArithmetic ar = decompose_pq(p, q);
    return {{{Chord::R3, Chord::R2}, ar.winding, "a"}, {{Chord::R3, Chord::R2, Chord::R1}, 1, "b1"}};
}

AinfReport check_ainf(const TypeAModule& m, int maxlen, int64_t maxU) {
    using Seq = std::vector<Chord>;
    std::map<std::pair<size_t, Seq>, std::vector<std::pair<size_t, int64_t>>> idx;
    std::map<size_t, std::vector<const AOp*>> byx;
    for (auto& op : m.ops) {
        idx[{op.x, op.chords}].push_back({op.y, op.U});
        byx[op.x].push_back(&op);
    }
    static const std::vector<std::pair<std::pair<Chord, Chord>, Chord>> prods = {
        {{Chord::R1, Chord::R2}, Chord::R12},
        {{Chord::R2, Chord::R3}, Chord::R23},
        {{Chord::R12, Chord::R3}, Chord::R123},
        {{Chord::R1, Chord::R23}, Chord::R123}};
    std::set<std::pair<size_t, Seq>> cands;
    for (auto& op : m.ops) {
        for (auto* o2 : byx[op.y]) {
            Seq s = op.chords;
            s.insert(s.end(), o2->chords.begin(), o2->chords.end());
            if (static_cast<int>(s.size()) <= maxlen) cands.insert({op.x, s});
        }
        for (size_t j = 0; j < op.chords.size(); ++j)
            for (auto& [ab, c] : prods)
                if (op.chords[j] == c && static_cast<int>(op.chords.size()) + 1 <= maxlen) {
                    Seq s(op.chords.begin(), op.chords.begin() + static_cast<long>(j));
                    s.push_back(ab.first);
                    s.push_back(ab.second);
                    s.insert(s.end(), op.chords.begin() + static_cast<long>(j) + 1, op.chords.end());
                    cands.insert({op.x, s});
                }
    }
    AinfReport rep;
    rep.candidates = cands.size();
    for (auto& [x, s] : cands) {
        std::map<std::pair<size_t, int64_t>, int> acc;
        for (size_t i = 0; i <= s.size(); ++i) {
            auto it = idx.find({x, Seq(s.begin(), s.begin() + static_cast<long>(i))});
            if (it == idx.end()) continue;
            for (auto [y, U] : it->second) {
                auto it2 = idx.find({y, Seq(s.begin() + static_cast<long>(i), s.end())});
                if (it2 == idx.end()) continue;
                for (auto [z, U2] : it2->second) acc[{z, U + U2}] ^= 1;
            }
        }
        for (size_t j = 0; j + 1 < s.size(); ++j)
            for (auto& [ab, c] : prods) {
                if (s[j] != ab.first || s[j + 1] != ab.second) continue;
                Seq t(s.begin(), s.begin() + static_cast<long>(j));
                t.push_back(c);
                t.insert(t.end(), s.begin() + static_cast<long>(j) + 2, s.end());
                auto it = idx.find({x, t});
                if (it == idx.end()) continue;
                for (auto [z, U] : it->second) acc[{z, U}] ^= 1;
            }
        for (auto& [zu, v] : acc)
            if (v && zu.second <= maxU) {
                std::string seq;
                for (auto c : s) seq += " " + chord_name(c);
                rep.violations.push_back(m.ids[x] + seq + " -> U^" + std::to_string(zu.second) + " " + m.ids[zu.first]);
            }
    }
    return rep;
}

namespace {

Grading chord_product_grading(const std::vector<Chord>& s) {
    Grading g = gr_identity();
    for (auto c : s) g = gr_compose(g, gr_of_chord(c));
    return g;
}

// gr(y) = lambda^(k-1) gr(x) gr(rho_i1)...gr(rho_ik) u^(-U)
Grading forward(const AOp& op, const Grading& gx) {
    int64_t k = static_cast<int64_t>(op.chords.size());
    return gr_compose(gr_compose(gr_pow(gr_lambda(), k - 1), gr_compose(gx, chord_product_grading(op.chords))),
                      gr_pow(gr_u(), -op.U));
}

Grading backward(const AOp& op, const Grading& gy) {
    int64_t k = static_cast<int64_t>(op.chords.size());
    return gr_compose(gr_compose(gr_pow(gr_lambda(), 1 - k), gr_pow(gr_u(), op.U)),
                      gr_compose(gy, gr_invert(chord_product_grading(op.chords))));
}

}  // namespace

GradedTypeA grade_cfa(const TypeAModule& m, const PatternArithmetic& ar) {
    GradedTypeA out;
    size_t n = m.ids.size();
    out.gr.assign(n, gr_identity());
    out.stated_period = gr_compose(gr_pow(gr_u(), -ar.n_w), gr_of_chord(Chord::R23));
    const AOp* loop = nullptr;
    for (auto& op : m.ops)
        if (op.x == m.a && op.y == m.a && op.chords == std::vector<Chord>{Chord::R3, Chord::R2}) loop = &op;
    if (!loop) throw Error(ErrorKind::Internal, "grade_cfa: m3(a,3,2) missing");
    out.period = forward(*loop, gr_identity());

    std::vector<bool> known(n, false), tree(m.ops.size(), false);
    known[m.a] = true;
    std::deque<size_t> queue{m.a};
    while (!queue.empty()) {
        size_t v = queue.front();
        queue.pop_front();
        for (size_t e = 0; e < m.ops.size(); ++e) {
            const auto& op = m.ops[e];
            if (op.x == v && !known[op.y]) {
                out.gr[op.y] = forward(op, out.gr[v]);
                known[op.y] = tree[e] = true;
                queue.push_back(op.y);
            } else if (op.y == v && !known[op.x]) {
                out.gr[op.x] = backward(op, out.gr[v]);
                known[op.x] = tree[e] = true;
                queue.push_back(op.x);
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!known[i]) throw Error(ErrorKind::Internal, "grade_cfa: generator " + m.ids[i] + " not connected to a");
    const Grading& g = out.period;
    for (size_t e = 0; e < m.ops.size(); ++e) {
        const auto& op = m.ops[e];
        // predicted = g^k gr(y)
        Grading dlt = gr_compose(forward(op, out.gr[op.x]), gr_invert(out.gr[op.y]));
        int64_t k = g.j2 != 0 ? dlt.j2 / g.j2 : 0;
        if (!(gr_pow(g, k) == dlt))
            throw Error(ErrorKind::Internal, "grade_cfa: inconsistent grading along an operation from " + m.ids[op.x]);
    }
    return out;
}

bool check_b1_property(const TypeAModule& m) {
    for (auto& op : m.ops)
        if ((op.x == m.b1 || op.y == m.b1) && op.U < 1) return false;
    return true;
}

bool check_a_conditions(const TypeAModule& m) {
    for (auto& op : m.ops) {
        if (op.x == m.a && !op.chords.empty() && op.chords[0] == Chord::R123) return false;
        if (op.y == m.a && op.x != m.a && op.U == 0) return false;
    }
    return true;
}

std::string ops_dump(const TypeAModule& m) {
    std::string s;
    for (auto& op : m.ops) {
        s += "m " + m.ids[op.x];
        for (auto c : op.chords) s += " " + chord_name(c);
        s += " -> U^" + std::to_string(op.U) + " " + m.ids[op.y] + "\n";
    }
    return s;
}

}  // namespace cablefloer
