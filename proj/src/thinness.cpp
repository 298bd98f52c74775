#include <algorithm>
#include <numeric>

#include "cablefloer/error.hpp"
#include "cablefloer/thinness.hpp"

namespace cablefloer {

ReducedParameters reduce_parameters(int64_t p, int64_t q) {
    if (p < 2 || std::gcd(p, q < 0 ? -q : q) != 1)
        throw Error(ErrorKind::Domain, "cable parameters need p >= 2 and gcd(p,q) = 1");
    ReducedParameters rp;
    rp.p = p;
    rp.q0 = ((q % p) + p) % p;
    rp.m = (q - rp.q0) / p;
    if (rp.q0 <= 1)
        throw Error(ErrorKind::Unsupported, "q = " + std::to_string(q) + " is " + std::to_string(rp.q0) + " mod " +
                                                std::to_string(p) + "; residues 0 and 1 are not covered");
    return rp;
}

std::string case_tag(WitnessCase c) {
    switch (c) {
        case WitnessCase::Eps1: return "t!=0&eps=1";
        case WitnessCase::Eps1Unstable: return "t!=0&eps=1&tau=-1";
        case WitnessCase::Eps0: return "t!=0&eps=0";
        case WitnessCase::T0: return "t=0";
        case WitnessCase::MirrorReduced: return "mirror-reduced";
    }
    return "?";
}

namespace {

struct VerticalEnd {
    std::string xi;     // xi_2s, source of the D123 arrow into the chain
    std::string kappa;  // kappa^s_{l_s}
    int64_t A = 0, M = 0;
};

std::vector<VerticalEnd> vertical_ends(const TypeDModule& d) {
    std::vector<VerticalEnd> out;
    for (auto& a : d.arrows) {
        if (a.label != Chord::R123 || d.gens[a.dst].role != DRole::Kappa) continue;
        const auto& g = d.basis.gens[d.basis.index(d.gens[a.src].id)];
        out.push_back({d.gens[a.src].id, d.gens[a.dst].id, g.A, g.M});
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return std::tie(x.A, x.xi) < std::tie(y.A, y.xi); });
    return out;
}

}  // namespace

WitnessPlan select_witnesses(const ModelComplex& k, const CableResult& res, bool force_unstable) {
    if (k.gens.size() <= 1) throw Error(ErrorKind::Domain, "the unknot companion has no witness pair");
    const TypeDModule& d = res.D;
    int64_t tk = tau(k);
    int eps = epsilon(k);
    int64_t vx = res.ar.v * res.ar.x;
    int64_t w = res.ar.winding;
    auto ends = vertical_ends(d);
    WitnessPlan plan;
    if (force_unstable || (eps == 1 && d.t != 0 && tk == -1)) {
        if (d.t == 0) throw Error(ErrorKind::Domain, "the unstable chain is empty when t = 0");
        plan.kase = WitnessCase::Eps1Unstable;
        if (ends.empty()) throw Error(ErrorKind::Domain, "no vertical chain for a(x)xi2");
        auto it = std::find_if(ends.begin(), ends.end(), [&](auto& e) { return e.A == -tk && e.M == -2 * tk; });
        const VerticalEnd& e = it != ends.end() ? *it : ends.front();
        plan.a_partner = e.xi;
        plan.b1_partner = "mu1";
        plan.closed_a = {0, tk * (vx + 1)};
        plan.closed_b1 = d.t < 0 ? CanonicalGrading{1, vx} : CanonicalGrading{2, 2 * vx};
        plan.derived_a = {e.M - 2 * e.A, -e.A * w};
        plan.derived_b1 = d.t < 0 ? CanonicalGrading{1, w - 1} : CanonicalGrading{2, 2 * w - 1};
        plan.note = d.t < 0 ? "mu1 = D123 xi0" : "mu1 = D1 xi0";
        return plan;
    }
    if (d.t == 0) {
        if (ends.empty()) throw Error(ErrorKind::Domain, "no vertical chain for the t = 0 pair");
        const VerticalEnd& e = ends.front();
        plan.kase = WitnessCase::T0;
        plan.a_partner = e.xi;
        plan.b1_partner = e.kappa;
        plan.closed_a = {e.M - 2 * e.A, -vx * e.A};
        plan.closed_b1 = {e.M - 2 * e.A - 1, -vx * e.A};
        plan.derived_a = {e.M - 2 * e.A, -e.A * w};
        plan.derived_b1 = {plan.derived_a.a - 1, plan.derived_a.b - 1};
        plan.note = "lowest vertical chain end " + e.xi;
        return plan;
    }
    if (eps == 1) {
        auto it = std::find_if(ends.begin(), ends.end(), [&](auto& e) { return e.A == -tk && e.M == -2 * tk; });
        if (it == ends.end()) throw Error(ErrorKind::Domain, "no vertical chain ending at A = -tau, M = -2 tau");
        plan.kase = WitnessCase::Eps1;
        plan.a_partner = it->xi;
        plan.b1_partner = it->kappa;
        plan.closed_a = {0, tk * (vx + 1)};
        plan.closed_b1 = {-1, vx * tk};
        plan.derived_a = {it->M - 2 * it->A, -it->A * w};
        plan.derived_b1 = {plan.derived_a.a - 1, plan.derived_a.b - 1};
        return plan;
    }
    if (eps == 0) {
        int64_t g = genus(k);
        auto it = std::find_if(ends.begin(), ends.end(), [&](auto& e) { return e.A == -g; });
        if (it == ends.end()) throw Error(ErrorKind::Domain, "no vertical chain ending in the lowest Alexander grading");
        plan.kase = WitnessCase::Eps0;
        plan.a_partner = it->xi;
        plan.b1_partner = it->kappa;
        plan.closed_a = {it->M + 2 * g, vx * g};
        plan.closed_b1 = {it->M + 2 * g - 1, vx * g};
        plan.derived_a = {it->M - 2 * it->A, -it->A * w};
        plan.derived_b1 = {plan.derived_a.a - 1, plan.derived_a.b - 1};
        return plan;
    }
    throw Error(ErrorKind::Domain, "epsilon = -1 goes through the mirror");
}

namespace {

Witness make_witness(const CableResult& res, size_t a_gen, const std::string& partner, const std::string& role,
                     CanonicalGrading closed, CanonicalGrading derived) {
    Witness w;
    w.element = res.A.ids[a_gen] + "|" + partner;
    w.role = role;
    size_t i = res.C.index(w.element);
    w.computed = res.C.gens[i].cg;
    w.closed_form = closed;
    w.derived = derived;
    std::tie(w.A, w.M) = normalize_one(w.computed, res.nz);
    w.survives = verify_cycle_nonzero(res.C, i);
    return w;
}

}  // namespace

WitnessReport thinness_verdict(const ModelComplex& k, const std::string& name, int64_t p, int64_t q,
                               const ThinnessOptions& opt) {
    if (k.gens.size() <= 1) throw Error(ErrorKind::Domain, "the unknot companion has no witness pair");
    ReducedParameters rp = reduce_parameters(p, q);
    WitnessReport rep;
    rep.companion = name;
    rep.p = p;
    rep.q = q;
    rep.q0 = rp.q0;
    rep.tau = tau(k);
    rep.epsilon = epsilon(k);
    rep.r = opt.framing ? rp.m + *opt.framing : 2 * rep.tau - 1;
    rep.cable_q = rp.q0 + p * rep.r;
    rep.t = 2 * rep.tau - rep.r;

    CableResult res = compute_cable(k, p, rp.q0, rep.r, opt.caps);
    rep.vx = res.ar.v * res.ar.x;
    rep.hfk = res.hfk;
    for (auto& [am, n] : res.hfk) rep.deltas.insert(am.second - am.first);

    if (rep.epsilon == -1 && !opt.force_unstable) {
        rep.kase = WitnessCase::MirrorReduced;
        // K_{p,q'} is the mirror of (-K)_{p,-q'}
        if (opt.try_mirror) {
            rep.mirror_tried = true;
            int64_t mq = -rep.cable_q;
            int64_t mq0 = ((mq % p) + p) % p;
            if (mq0 <= 1) {
                rep.mirror_note = "mirror pattern slope " + std::to_string(mq) + " is " + std::to_string(mq0) +
                                  " mod " + std::to_string(p) + ", unsupported; certified directly";
            } else {
                ThinnessOptions mo = opt;
                mo.framing = (mq - mq0) / p;
                mo.try_mirror = false;
                WitnessReport mr = thinness_verdict(mirror(k), "mirror(" + name + ")", p, mq0, mo);
                rep.mirror_supported = true;
                rep.mirror_verdict = mr.verdict;
                rep.mirror_note = "mirror case " + case_tag(mr.kase) + ", pattern (" + std::to_string(p) + "," +
                                  std::to_string(mq0) + "), framing " + std::to_string(mr.r);
            }
        }
        // Witnesses on K itself: the HFK-hat classes with the extreme delta values.
        auto lo = std::min_element(res.hfk.begin(), res.hfk.end(),
                                   [](auto& x, auto& y) { return x.first.second - x.first.first < y.first.second - y.first.first; });
        auto hi = std::max_element(res.hfk.begin(), res.hfk.end(),
                                   [](auto& x, auto& y) { return x.first.second - x.first.first < y.first.second - y.first.first; });
        for (auto it : {hi, lo}) {
            Witness w;
            w.role = "hfk-class";
            w.A = it->first.first;
            w.M = it->first.second;
            w.element = "A=" + std::to_string(w.A) + ",M=" + std::to_string(w.M);
            w.computed = {w.M - 2 * w.A + res.nz.a_star, res.nz.d0 - w.A};
            w.closed_form = w.derived = w.computed;
            w.survives = true;
            rep.witnesses.push_back(w);
        }
        rep.note = "epsilon = -1";
    } else {
        WitnessPlan plan = select_witnesses(k, res, opt.force_unstable);
        rep.kase = plan.kase;
        rep.note = plan.note;
        rep.witnesses.push_back(make_witness(res, res.A.a, plan.a_partner, "a(x)" + plan.a_partner, plan.closed_a,
                                              plan.derived_a));
        rep.witnesses.push_back(
            make_witness(res, res.A.b1, plan.b1_partner, "b1(x)" + plan.b1_partner, plan.closed_b1,
                                              plan.derived_b1));
    }
    const auto& w1 = rep.witnesses[0].computed;
    const auto& w2 = rep.witnesses[1].computed;
    rep.lhs = w1.a - w2.a;
    rep.rhs = w1.b - w2.b;
    rep.pair_violates = rep.lhs != rep.rhs;
    rep.verdict = rep.deltas.size() >= 2 ? "not-thin" : "inconclusive";
    rep.label = "certified";
    return rep;
}

}  // namespace cablefloer
