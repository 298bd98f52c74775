#include "cablefloer/cfd.hpp"

#include <deque>
#include <map>

#include "cablefloer/error.hpp"

namespace cablefloer {

std::string role_name(DRole r) {
    switch (r) {
        case DRole::Xi: return "xi";
        case DRole::Eta: return "eta";
        case DRole::XiEta: return "xi_eta";
        case DRole::Kappa: return "kappa";
        case DRole::HChain: return "hchain";
        case DRole::Mu: return "mu";
    }
    return "?";
}

size_t TypeDModule::index(const std::string& id) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].id == id) return i;
    throw Error(ErrorKind::Internal, "unknown type D generator " + id);
}

TypeDModule build_cfd(const ModelComplex& c, int64_t r) {
    TypeDModule d;
    d.simplified = simultaneous_basis(c);
    d.basis = d.simplified.complex;
    d.r = r;
    d.xi0 = d.simplified.vertical.distinguished;
    d.eta0 = d.simplified.horizontal.distinguished;
    int64_t tau_k = d.basis.gens[d.basis.index(d.xi0)].A;
    d.t = 2 * tau_k - r;

    for (auto& g : d.basis.gens) {
        DRole role = DRole::Xi;
        if (g.id == d.xi0 && g.id == d.eta0) role = DRole::XiEta;
        else if (g.id == d.eta0) role = DRole::Eta;
        d.gens.push_back({g.id, 0, role, 0, 0});
    }
    auto add = [&](const std::string& id, DRole role, int chain, int pos) {
        d.gens.push_back({id, 1, role, chain, pos});
        return d.gens.size() - 1;
    };
    auto arrow = [&](size_t s, size_t t, Chord l) { d.arrows.push_back({s, t, l}); };

    int idx = 0;
    for (auto& p : d.simplified.vertical.pairs) {
        ++idx;
        std::vector<size_t> k;
        for (int64_t j = 1; j <= p.length; ++j)
            k.push_back(add("kappa" + std::to_string(idx) + "_" + std::to_string(j), DRole::Kappa, idx, static_cast<int>(j)));
        arrow(d.index(p.src), k.front(), Chord::R1);
        for (size_t j = 1; j < k.size(); ++j) arrow(k[j], k[j - 1], Chord::R23);
        arrow(d.index(p.dst), k.back(), Chord::R123);
    }
    idx = 0;
    for (auto& p : d.simplified.horizontal.pairs) {
        ++idx;
        std::vector<size_t> l;
        for (int64_t j = 1; j <= p.length; ++j)
            l.push_back(add("hchain" + std::to_string(idx) + "_" + std::to_string(j), DRole::HChain, idx, static_cast<int>(j)));
        arrow(d.index(p.src), l.front(), Chord::R3);
        for (size_t j = 0; j + 1 < l.size(); ++j) arrow(l[j], l[j + 1], Chord::R23);
        arrow(l.back(), d.index(p.dst), Chord::R2);
    }
    size_t xi = d.index(d.xi0), eta = d.index(d.eta0);
    if (d.t == 0) {
        arrow(xi, eta, Chord::R12);
    } else {
        int64_t n = d.t > 0 ? d.t : -d.t;
        std::vector<size_t> mu;
        for (int64_t j = 1; j <= n; ++j) mu.push_back(add("mu" + std::to_string(j), DRole::Mu, 0, static_cast<int>(j)));
        if (d.t > 0) {
            arrow(xi, mu.front(), Chord::R1);
            for (size_t j = 1; j < mu.size(); ++j) arrow(mu[j], mu[j - 1], Chord::R23);
            arrow(eta, mu.back(), Chord::R3);
        } else {
            arrow(xi, mu.front(), Chord::R123);
            for (size_t j = 0; j + 1 < mu.size(); ++j) arrow(mu[j], mu[j + 1], Chord::R23);
            arrow(mu.back(), eta, Chord::R2);
        }
    }
    return d;
}

TypeDReport check_typeD(const TypeDModule& d) {
    TypeDReport rep;
    for (auto& a : d.arrows) {
        if (d.gens[a.src].idem != chord_source_idem(a.label) || d.gens[a.dst].idem != chord_target_idem(a.label))
            rep.issues.push_back("arrow " + d.gens[a.src].id + " -D" + chord_name(a.label) + "-> " + d.gens[a.dst].id +
                                 ": idempotents do not match the chord");
    }
    // (mu (x) id) o (id (x) delta) o delta = 0, componentwise mod 2
    std::map<std::tuple<size_t, size_t, Chord>, int> sq;
    for (auto& a : d.arrows)
        for (auto& b : d.arrows) {
            if (a.dst != b.src) continue;
            if (auto p = chord_product(a.label, b.label)) sq[{a.src, b.dst, *p}] ^= 1;
        }
    for (auto& [key, v] : sq)
        if (v) {
            auto [s, t, l] = key;
            rep.issues.push_back("type D condition fails: " + d.gens[s].id + " -> rho" + chord_name(l) + " " + d.gens[t].id);
        }
    return rep;
}

Grading iota0_grading(int64_t A, int64_t M) {
    return gr_compose(gr_pow(gr_lambda(), M - 2 * A), gr_pow(gr_of_chord(Chord::R23), -A));
}

Grading cfd_period(int64_t r) {
    return gr_compose(gr_invert(gr_lambda()),
                      gr_compose(gr_pow(gr_of_chord(Chord::R23), -r), gr_invert(gr_of_chord(Chord::R12))));
}

Grading cfd_stated_period(int64_t r) {
    return gr_compose(gr_invert(gr_lambda()),
                      gr_compose(gr_invert(gr_of_chord(Chord::R12)), gr_pow(gr_of_chord(Chord::R23), -r)));
}

namespace {

// exponent k with g == h^k, if any
std::optional<int64_t> power_of(const Grading& g, const Grading& h) {
    int64_t k = 0;
    if (h.i2 != 0) k = g.i2 / h.i2;
    else if (h.j2 != 0) k = g.j2 / h.j2;
    else if (h.m2 != 0) k = g.m2 / h.m2;
    if (gr_pow(h, k) == g) return k;
    return std::nullopt;
}

}  // namespace

GradedTypeD grade_cfd(const TypeDModule& d) {
    GradedTypeD out;
    size_t n = d.gens.size();
    std::vector<bool> known(n, false);
    out.gr.assign(n, gr_identity());
    std::deque<size_t> queue;
    for (size_t i = 0; i < n; ++i)
        if (d.gens[i].idem == 0) {
            const auto& g = d.basis.gens[d.basis.index(d.gens[i].id)];
            out.gr[i] = iota0_grading(g.A, g.M);
            known[i] = true;
            queue.push_back(i);
        }
    // gr(dst) = lambda^-1 gr(rho_I)^-1 gr(src); used forwards and backwards
    auto forward = [](Chord l, const Grading& s) {
        return gr_compose(gr_invert(gr_lambda()), gr_compose(gr_invert(gr_of_chord(l)), s));
    };
    auto backward = [](Chord l, const Grading& t) {
        return gr_compose(gr_of_chord(l), gr_compose(gr_lambda(), t));
    };
    std::vector<bool> tree(d.arrows.size(), false);
    while (!queue.empty()) {
        size_t v = queue.front();
        queue.pop_front();
        for (size_t e = 0; e < d.arrows.size(); ++e) {
            const auto& a = d.arrows[e];
            if (a.src == v && !known[a.dst]) {
                out.gr[a.dst] = forward(a.label, out.gr[v]);
                known[a.dst] = true;
                tree[e] = true;
                queue.push_back(a.dst);
            } else if (a.dst == v && !known[a.src]) {
                out.gr[a.src] = backward(a.label, out.gr[v]);
                known[a.src] = true;
                tree[e] = true;
                queue.push_back(a.src);
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!known[i]) throw Error(ErrorKind::Internal, "type D generator " + d.gens[i].id + " not reached by grading");

    // discrepancies of non-tree arrows: gr(dst)^-1 * predicted
    std::vector<Grading> disc;
    for (size_t e = 0; e < d.arrows.size(); ++e) {
        if (tree[e]) continue;
        const auto& a = d.arrows[e];
        disc.push_back(gr_compose(gr_invert(out.gr[a.dst]), forward(a.label, out.gr[a.src])));
    }
    out.stated_period = cfd_stated_period(d.r);
    out.period = cfd_period(d.r);
    // the loop through the unstable chain determines the period; normalize to spinc i = -1
    for (auto& g : disc)
        if (g.i2 == 2 || g.i2 == -2) {
            Grading h = g.i2 == -2 ? g : gr_invert(g);
            if (!(h == out.period))
                throw Error(ErrorKind::Internal, "type D loop period " + h.str() + " differs from " + out.period.str());
            break;
        }
    out.stated_period_consistent = true;
    for (auto& g : disc) {
        auto k = power_of(g, out.period);
        if (!k) throw Error(ErrorKind::Internal, "type D grading does not close up: discrepancy " + g.str());
        out.loop_exponents.push_back(*k);
        if (!power_of(g, out.stated_period)) out.stated_period_consistent = false;
    }
    return out;
}

}  // namespace cablefloer
