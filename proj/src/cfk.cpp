#include "cablefloer/cfk.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <tuple>

#include "cablefloer/error.hpp"
#include "cablefloer/gf2.hpp"

namespace cablefloer {

std::optional<size_t> ModelComplex::find(const std::string& id) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].id == id) return i;
    return std::nullopt;
}

size_t ModelComplex::index(const std::string& id) const {
    auto i = find(id);
    if (!i) throw Error(ErrorKind::Internal, "unknown generator " + id);
    return *i;
}

void ModelComplex::add_gen(std::string id, int64_t A, int64_t M) { gens.push_back({std::move(id), A, M}); }

void ModelComplex::add_arrow(const std::string& src, const std::string& dst, int64_t k) {
    arrows.push_back({index(src), index(dst), k});
}

bool same_complex(const ModelComplex& a, const ModelComplex& b) {
    if (a.gens.size() != b.gens.size() || a.arrows.size() != b.arrows.size()) return false;
    std::set<std::tuple<std::string, int64_t, int64_t>> ga, gb;
    for (auto& g : a.gens) ga.insert({g.id, g.A, g.M});
    for (auto& g : b.gens) gb.insert({g.id, g.A, g.M});
    if (ga != gb) return false;
    std::multiset<std::tuple<std::string, std::string, int64_t>> aa, ab;
    for (auto& x : a.arrows) aa.insert({a.gens[x.src].id, a.gens[x.dst].id, x.k});
    for (auto& x : b.arrows) ab.insert({b.gens[x.src].id, b.gens[x.dst].id, x.k});
    return aa == ab;
}

bool is_vertical(const ModelComplex&, const CfkArrow& a) { return a.k == 0; }

bool is_horizontal(const ModelComplex& c, const CfkArrow& a) {
    return a.k > 0 && c.gens[a.dst].A - a.k == c.gens[a.src].A;
}

ValidationReport validate_complex(const ModelComplex& c) {
    ValidationReport r;
    std::set<std::string> ids;
    for (auto& g : c.gens)
        if (!ids.insert(g.id).second) r.issues.push_back("duplicate generator id " + g.id);
    if (c.gens.size() % 2 == 0)
        r.issues.push_back("generator count " + std::to_string(c.gens.size()) + " is not odd");
    std::set<std::tuple<size_t, size_t, int64_t>> seen;
    for (auto& a : c.arrows) {
        const auto& s = c.gens[a.src];
        const auto& t = c.gens[a.dst];
        std::string tag = "arrow " + s.id + "->" + t.id + " U=" + std::to_string(a.k);
        if (!seen.insert({a.src, a.dst, a.k}).second) r.issues.push_back(tag + ": duplicated");
        if (a.k < 0) r.issues.push_back(tag + ": negative U-power");
        if (a.src == a.dst) r.issues.push_back(tag + ": self-arrow");
        if (s.M - t.M != 1 - 2 * a.k)
            r.issues.push_back(tag + ": Maslov rule M(src)-M(tgt)=1-2k fails");
        if (t.A - a.k > s.A) r.issues.push_back(tag + ": raises the Alexander filtration");
        if (a.k == 0 && t.A == s.A) r.issues.push_back(tag + ": U^0 arrow preserves A (complex not reduced)");
    }
    // d^2 = 0 over F2[U]
    std::map<std::tuple<size_t, size_t, int64_t>, int> sq;
    for (auto& a : c.arrows)
        for (auto& b : c.arrows)
            if (a.dst == b.src) sq[{a.src, b.dst, a.k + b.k}] ^= 1;
    for (auto& [key, v] : sq)
        if (v) {
            auto [s, t, k] = key;
            r.issues.push_back("d^2 != 0: " + c.gens[s].id + " -> U^" + std::to_string(k) + " " + c.gens[t].id);
        }
    return r;
}

void require_valid(const ModelComplex& c) {
    auto r = validate_complex(c);
    if (r.ok()) return;
    std::string msg = "invalid complex:";
    for (auto& s : r.issues) msg += "\n  " + s;
    throw Error(ErrorKind::Invalid, msg);
}

ModelComplex mirror(const ModelComplex& c) {
    ModelComplex m;
    for (auto& g : c.gens) m.gens.push_back({g.id, -g.A, -g.M});
    for (auto& a : c.arrows) m.arrows.push_back({a.dst, a.src, a.k});
    return m;
}

std::map<std::pair<int64_t, int64_t>, int64_t> companion_hfk(const ModelComplex& c) {
    size_t n = c.gens.size();
    std::map<std::pair<int64_t, int64_t>, std::vector<size_t>> bins;
    for (size_t i = 0; i < n; ++i) bins[{c.gens[i].A, c.gens[i].M}].push_back(i);
    // rank of the associated graded differential leaving each bin
    std::map<std::pair<int64_t, int64_t>, int64_t> out_rank;
    for (auto& [key, members] : bins) {
        std::vector<BitVec> cols;
        for (size_t i : members) {
            BitVec v(n);
            for (auto& a : c.arrows)
                if (a.src == i && a.k == 0 && c.gens[a.dst].A == c.gens[i].A) v.flip(a.dst);
            cols.push_back(v);
        }
        out_rank[key] = static_cast<int64_t>(gf2_rank(cols, n));
    }
    std::map<std::pair<int64_t, int64_t>, int64_t> h;
    for (auto& [key, members] : bins) {
        auto in = out_rank.find({key.first, key.second + 1});
        int64_t r = static_cast<int64_t>(members.size()) - out_rank[key] - (in == out_rank.end() ? 0 : in->second);
        if (r > 0) h[key] = r;
    }
    return h;
}

int64_t genus(const ModelComplex& c) {
    int64_t g = 0;
    for (auto& [key, r] : companion_hfk(c)) g = std::max(g, key.first);
    return g;
}

Laurent alexander_polynomial(const ModelComplex& c) {
    Laurent l;
    for (auto& [key, r] : companion_hfk(c)) l.add_term((key.second % 2 == 0 ? 1 : -1) * r, key.first);
    return l;
}

ModelComplex staircase_from_alexander(const Laurent& delta) {
    std::vector<int64_t> ex;
    int64_t expect = 1;
    for (auto it = delta.terms().rbegin(); it != delta.terms().rend(); ++it) {
        if (it->second != expect)
            throw Error(ErrorKind::Domain, "staircase needs coefficients alternating +1,-1 from the top: " + delta.str());
        ex.push_back(it->first);
        expect = -expect;
    }
    if (ex.empty() || ex.size() % 2 == 0) throw Error(ErrorKind::Domain, "staircase needs an odd number of terms");
    ModelComplex c;
    int64_t M = 0;
    for (size_t i = 0; i < ex.size(); ++i) {
        if (i > 0) {
            if (i % 2 == 1) M = M + 1 - 2 * (ex[i - 1] - ex[i]);
            else M = M - 1;
        }
        c.add_gen("x" + std::to_string(i + 1), ex[i], M);
    }
    for (size_t i = 1; i < ex.size(); i += 2) {
        c.arrows.push_back({i, i - 1, ex[i - 1] - ex[i]});
        c.arrows.push_back({i, i + 1, 0});
    }
    return c;
}

std::vector<std::string> catalog_names() {
    return {"unknot", "trefoil_rh", "trefoil_lh", "figure_eight", "torus(a,b)"};
}

ModelComplex catalog_get(const std::string& name) {
    ModelComplex c;
    if (name == "unknot") {
        c.add_gen("x0", 0, 0);
    } else if (name == "trefoil_rh") {
        c = staircase_from_alexander(torus_alexander(3, 2));
    } else if (name == "trefoil_lh") {
        c = mirror(catalog_get("trefoil_rh"));
    } else if (name == "figure_eight") {
        c.add_gen("a", 0, 0);
        c.add_gen("b", -1, -1);
        c.add_gen("c", 1, 1);
        c.add_gen("d", 0, 0);
        c.add_gen("x0", 0, 0);
        c.add_arrow("a", "b", 0);
        c.add_arrow("a", "c", 1);
        c.add_arrow("b", "d", 1);
        c.add_arrow("c", "d", 0);
    } else {
        static const std::regex re(R"(torus\((-?\d+),(-?\d+)\))");
        std::smatch m;
        if (!std::regex_match(name, m, re)) throw Error(ErrorKind::Domain, "unknown catalog entry " + name);
        int64_t a = std::stoll(m[1]), b = std::stoll(m[2]);
        if (a == 0 || b == 0 || std::gcd(a, b) != 1)
            throw Error(ErrorKind::Domain, "torus knot parameters must be coprime and nonzero");
        c = staircase_from_alexander(torus_alexander(a, b));
        if ((a < 0) != (b < 0)) c = mirror(c);
    }
    require_valid(c);
    return c;
}

}  // namespace cablefloer
