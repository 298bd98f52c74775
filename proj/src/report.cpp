#include "cablefloer/report.hpp"

namespace cablefloer {

std::string canonical_str(const CanonicalGrading& g) {
    return "(" + std::to_string(g.a) + ";0,0;" + std::to_string(g.b) + ")";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json grading_json(const Grading& g) {
    Json j;
    j["m"] = g.maslov_str();
    j["i"] = g.i_str();
    j["j"] = g.j_str();
    j["n"] = g.n;
    return j;
}

Json complex_summary_json(const std::string& name, const ModelComplex& c) {
    Json j;
    j["name"] = name;
    j["generators"] = c.gens.size();
    j["arrows"] = c.arrows.size();
    j["genus"] = genus(c);
    j["tau"] = tau(c);
    j["nu"] = nu(c);
    j["epsilon"] = epsilon(c);
    j["alexander"] = alexander_polynomial(c).str();
    return j;
}

Json cfd_json(const TypeDModule& d, const GradedTypeD& g) {
    Json j;
    j["r"] = d.r;
    j["t"] = d.t;
    j["xi0"] = d.xi0;
    j["eta0"] = d.eta0;
    j["period"] = grading_json(g.period);
    j["stated_period"] = grading_json(g.stated_period);
    j["stated_period_closes"] = g.stated_period_consistent;
    Json gens = Json::array();
    for (size_t i = 0; i < d.gens.size(); ++i) {
        Json x;
        x["id"] = d.gens[i].id;
        x["idem"] = d.gens[i].idem;
        x["role"] = role_name(d.gens[i].role);
        x["grading"] = grading_json(g.gr[i]);
        gens.push_back(x);
    }
    j["generators"] = gens;
    Json arrows = Json::array();
    for (auto& a : d.arrows)
        arrows.push_back(Json{{"src", d.gens[a.src].id}, {"dst", d.gens[a.dst].id}, {"label", chord_name(a.label)}});
    j["arrows"] = arrows;
    return j;
}

Json pattern_json(const PatternArithmetic& ar, const BorderedDiagram& d, const TypeAModule& m, bool with_ops) {
    Json j;
    j["p"] = ar.p;
    j["q"] = ar.q;
    j["x"] = ar.x;
    j["y"] = ar.y;
    j["u"] = ar.u;
    j["v"] = ar.v;
    j["n_w"] = ar.n_w;
    j["winding"] = ar.winding;
    j["generators"] = d.gens.size();
    size_t i0 = 0;
    for (auto& c : d.gens) i0 += c.idem == 0;
    j["iota0"] = i0;
    j["bigons_removed"] = d.bigons_removed;
    j["a"] = m.ids[m.a];
    j["b1"] = m.ids[m.b1];
    j["caps"] = Json{{"chordlen", m.caps.chordlen}, {"wmult", effective_wmult(m.caps, ar)}};
    j["operations"] = m.ops.size();
    j["dropped_by_wmult"] = m.dropped_by_wmult;
    j["truncated"] = m.truncated;
    j["a_conditions"] = check_a_conditions(m);
    j["b1_property"] = check_b1_property(m);
    if (with_ops) {
        Json ops = Json::array();
        for (auto& op : m.ops) {
            Json chords = Json::array();
            for (auto c : op.chords) chords.push_back(chord_name(c));
            ops.push_back(Json{{"x", m.ids[op.x]}, {"chords", chords}, {"U", op.U}, {"y", m.ids[op.y]}});
        }
        j["ops"] = ops;
    }
    return j;
}

Json tensor_json(const CableResult& res, bool ranks, bool euler) {
    Json j;
    j["pattern"] = Json::array({res.ar.p, res.ar.q});
    j["framing"] = res.D.r;
    j["cable"] = Json::array({res.ar.p, res.ar.q + res.ar.p * res.D.r});
    Json gens = Json::array();
    for (auto& g : res.C.gens) {
        auto [A, M] = normalize_one(g.cg, res.nz);
        gens.push_back(Json{{"id", g.id}, {"a", g.cg.a}, {"b", g.cg.b}, {"A", A}, {"M", M}});
    }
    j["generators"] = gens;
    Json arrows = Json::array();
    for (auto& a : res.C.arrows)
        arrows.push_back(Json{{"src", res.C.gens[a.src].id}, {"dst", res.C.gens[a.dst].id}, {"u", a.U}});
    j["arrows"] = arrows;
    if (ranks) {
        Json rk = Json::object();
        int64_t total = 0;
        for (auto& [am, n] : res.hfk) {
            rk[std::to_string(am.first) + "," + std::to_string(am.second)] = n;
            total += n;
        }
        j["ranks"] = rk;
        j["total_rank"] = total;
    }
    if (euler) j["euler"] = res.euler.str();
    return j;
}

Json witness_json(const WitnessReport& rep) {
    Json j;
    j["companion"] = rep.companion;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["pattern_q"] = rep.q0;
    j["framing"] = rep.r;
    j["cable"] = Json::array({rep.p, rep.cable_q});
    j["tau"] = rep.tau;
    j["t"] = rep.t;
    j["epsilon"] = rep.epsilon;
    j["vx"] = rep.vx;
    j["case"] = case_tag(rep.kase);
    if (!rep.note.empty()) j["note"] = rep.note;
    Json ws = Json::array();
    for (auto& w : rep.witnesses) {
        Json x;
        x["element"] = w.element;
        x["role"] = w.role;
        x["grading"] = canonical_str(w.computed);
        x["a"] = w.computed.a;
        x["b"] = w.computed.b;
        x["display"] = canonical_str(w.closed_form);
        x["derived"] = canonical_str(w.derived);
        x["A"] = w.A;
        x["M"] = w.M;
        x["survives"] = w.survives;
        ws.push_back(x);
    }
    j["witnesses"] = ws;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["relation"] = "thin forces lhs == rhs, lhs = a1 - a2, rhs = b1 - b2 (u-exponents)";
    j["pair_violates"] = rep.pair_violates;
    j["deltas"] = Json(std::vector<int64_t>(rep.deltas.begin(), rep.deltas.end()));
    if (rep.mirror_tried) {
        Json m;
        m["supported"] = rep.mirror_supported;
        if (rep.mirror_supported) m["verdict"] = rep.mirror_verdict;
        m["note"] = rep.mirror_note;
        j["mirror"] = m;
    }
    j["verdict"] = rep.verdict;
    j["label"] = rep.label;
    return j;
}

}  // namespace cablefloer
