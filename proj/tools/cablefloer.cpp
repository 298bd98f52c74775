#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cablefloer/cache.hpp"
#include "cablefloer/error.hpp"
#include "cablefloer/report.hpp"

#ifndef CABLEFLOER_VERSION
#define CABLEFLOER_VERSION "dev"
#endif

using namespace cablefloer;

namespace {

struct Input {
    std::string name;
    std::string bytes;  // what the cache key hashes
    ModelComplex complex;
};

Input load_input(const std::string& ref) {
    Input in;
    if (ref.rfind("catalog:", 0) == 0) {
        in.name = ref.substr(8);
        in.complex = catalog_get(in.name);
        in.bytes = ref + "\n" + emit_complex(in.complex);
        return in;
    }
    std::ifstream f(ref, std::ios::binary);
    if (!f) throw Error(ErrorKind::Domain, "cannot read " + ref);
    std::stringstream ss;
    ss << f.rdbuf();
    in.name = ref;
    in.bytes = ss.str();
    try {
        in.complex = parse_complex(in.bytes);
    } catch (const Error& e) {
        throw Error(e.kind(), ref + ":" + e.what());
    }
    return in;
}

Caps parse_caps(const std::string& spec) {
    Caps caps;
    if (spec.empty()) return caps;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Domain, "--caps entry '" + item + "' is not key=value");
        std::string k = item.substr(0, eq), v = item.substr(eq + 1);
        int64_t n = 0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
        if (ec != std::errc() || ptr != v.data() + v.size() || n < 1)
            throw Error(ErrorKind::Domain, "--caps " + k + " needs a positive integer, got '" + v + "'");
        if (k == "chordlen") caps.chordlen = static_cast<int>(std::min<int64_t>(n, 64));
        else if (k == "wmult") caps.wmult = n;
        else throw Error(ErrorKind::Domain, "unknown --caps key '" + k + "' (chordlen, wmult)");
    }
    return caps;
}

std::string caps_str(const Caps& c) {
    return "chordlen=" + std::to_string(c.chordlen) + ",wmult=" + std::to_string(c.wmult);
}

std::string write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) throw Error(ErrorKind::Domain, "cannot write " + path);
    return path;
}

std::string text_cfd(const TypeDModule& d, const GradedTypeD& g) {
    std::ostringstream o;
    o << "r=" << d.r << " t=" << d.t << " xi0=" << d.xi0 << " eta0=" << d.eta0 << " period=" << g.period.str() << "\n";
    for (size_t i = 0; i < d.gens.size(); ++i)
        o << "gen " << d.gens[i].id << " idem=" << d.gens[i].idem << " " << role_name(d.gens[i].role) << " "
          << g.gr[i].str() << "\n";
    for (auto& a : d.arrows)
        o << d.gens[a.src].id << " -" << chord_name(a.label) << "-> " << d.gens[a.dst].id << "\n";
    return o.str();
}

std::string text_cable(const CableResult& res, bool ranks, bool euler) {
    std::ostringstream o;
    o << "cable (" << res.ar.p << "," << res.ar.q + res.ar.p * res.D.r << "): " << res.C.gens.size()
      << " generators, " << res.C.arrows.size() << " arrows\n";
    if (ranks) {
        int64_t total = 0;
        for (auto& [am, n] : res.hfk) {
            o << "A=" << am.first << " M=" << am.second << " rank=" << n << "\n";
            total += n;
        }
        o << "total rank " << total << "\n";
    }
    if (euler) o << "euler " << res.euler.str() << "\n";
    return o.str();
}

std::string text_thinness(const WitnessReport& rep) {
    std::ostringstream o;
    o << rep.companion << " cable (" << rep.p << "," << rep.cable_q << ") framing " << rep.r << " t=" << rep.t
      << " tau=" << rep.tau << " epsilon=" << rep.epsilon << " case " << case_tag(rep.kase) << "\n";
    for (auto& w : rep.witnesses)
        o << "  " << w.element << " " << canonical_str(w.computed) << " A=" << w.A << " M=" << w.M
          << (w.survives ? " survives" : "") << "\n";
    o << "lhs=" << rep.lhs << " rhs=" << rep.rhs << (rep.pair_violates ? " (pair violates)" : " (pair consistent)")
      << "\ndeltas:";
    for (auto d : rep.deltas) o << " " << d;
    o << "\n";
    if (rep.mirror_tried) o << "mirror: " << rep.mirror_note << (rep.mirror_supported ? ", " + rep.mirror_verdict : "") << "\n";
    o << rep.verdict << " (" << rep.label << ")\n";
    return o.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot Floer computations for cables via bordered Floer homology"};
    app.set_version_flag("--version", std::string(CABLEFLOER_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "Cache directory (default $CABLEFLOER_CACHE)");
    app.add_flag("--no-cache", no_cache, "Do not read or write the output cache");

    auto* catalog = app.add_subcommand("catalog", "Built-in companion complexes");
    catalog->require_subcommand(1);
    catalog->fallthrough();
    auto* catalog_list = catalog->add_subcommand("list", "List catalog entries");

    std::string in_ref;
    auto* validate = app.add_subcommand("validate", "Check a cfk v1 complex");
    validate->add_option("input", in_ref, "File or catalog:<name>")->required();

    int64_t framing = 0;
    auto* cfd = app.add_subcommand("cfd", "Type D module of the knot complement");
    cfd->add_option("input", in_ref, "File or catalog:<name>")->required();
    cfd->add_option("--framing,-r", framing, "Framing r")->required();

    int64_t pp = 0, qq = 0;
    std::string svg_path;
    bool with_cfa = false;
    std::string caps_spec;
    auto* pattern = app.add_subcommand("pattern", "Bordered diagram and type A module of the (p,q) pattern");
    pattern->add_option("p", pp)->required();
    pattern->add_option("q", qq)->required();
    pattern->add_option("--svg", svg_path, "Write the diagram as SVG");
    pattern->add_flag("--cfa", with_cfa, "Include the operation list");
    pattern->add_option("--caps", caps_spec, "chordlen=N,wmult=N");

    bool with_hfk = false, with_euler = false;
    std::optional<int64_t> opt_framing;
    auto* cable = app.add_subcommand("cable", "Knot Floer complex of a cable");
    cable->add_option("input", in_ref, "File or catalog:<name>")->required();
    cable->add_option("-p", pp)->required();
    cable->add_option("-q", qq)->required();
    cable->add_option("--framing,-r", opt_framing, "Framing added to q = m p + q0");
    cable->add_flag("--hfk", with_hfk, "HFK-hat rank table");
    cable->add_flag("--euler", with_euler, "Graded Euler characteristic");
    cable->add_option("--caps", caps_spec, "chordlen=N,wmult=N");

    auto* thin = app.add_subcommand("thinness", "Witness pair and thinness verdict");
    thin->add_option("input", in_ref, "File or catalog:<name>")->required();
    thin->add_option("-p", pp)->required();
    thin->add_option("-q", qq)->required();
    thin->add_option("--framing,-r", opt_framing, "Framing; default makes t = 1");
    thin->add_option("--caps", caps_spec, "chordlen=N,wmult=N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(ErrorKind::Domain);
    }

    const bool json = format == "json";
    try {
        if (catalog_list->parsed()) {
            if (json) {
                Json j = Json::array();
                for (auto& n : catalog_names()) {
                    if (n.find("(a,b)") != std::string::npos)
                        j.push_back(Json{{"name", n}, {"template", true}, {"example", "catalog:torus(5,3)"}});
                    else
                        j.push_back(complex_summary_json(n, catalog_get(n)));
                }
                std::cout << dump(Json{{"catalog", j}});
            } else {
                for (auto& n : catalog_names()) std::cout << n << "\n";
            }
            return 0;
        }
        if (validate->parsed()) {
            Input in = load_input(in_ref);
            Json j = complex_summary_json(in.name, in.complex);
            j["valid"] = true;
            if (json) std::cout << dump(j);
            else std::cout << "ok: " << in.complex.gens.size() << " generators, " << in.complex.arrows.size()
                           << " arrows, tau=" << tau(in.complex) << " epsilon=" << epsilon(in.complex) << "\n";
            return 0;
        }

        Caps caps = parse_caps(caps_spec);
        Input in;
        if (!pattern->parsed()) in = load_input(in_ref);
        std::string sub = app.get_subcommands().front()->get_name();
        std::string flags = format + (with_cfa ? " cfa" : "") + (with_hfk ? " hfk" : "") + (with_euler ? " euler" : "");
        std::string rstr = cfd->parsed() ? std::to_string(framing) : opt_framing ? std::to_string(*opt_framing) : "-";
        std::string key = OutputCache::key({in.bytes, sub, flags, std::to_string(pp), std::to_string(qq), rstr,
                                            caps_str(caps), CABLEFLOER_VERSION});
        OutputCache cache(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
        bool use_cache = !no_cache && svg_path.empty();
        if (use_cache)
            if (auto hit = cache.load(key)) {
                std::cout << *hit;
                return 0;
            }

        std::string out;
        if (cfd->parsed()) {
            TypeDModule d = build_cfd(in.complex, framing);
            GradedTypeD g = grade_cfd(d);
            out = json ? dump(cfd_json(d, g)) : text_cfd(d, g);
        } else if (pattern->parsed()) {
            PatternArithmetic ar = decompose_pq(pp, qq);
            BorderedDiagram d = build_diagram(pp, qq);
            TypeAModule m = enumerate_cfa(d, ar, caps);
            if (!svg_path.empty()) write_file(svg_path, diagram_svg(d, &m, 2));
            if (json) out = dump(pattern_json(ar, d, m, with_cfa));
            else {
                out = "pattern (" + std::to_string(pp) + "," + std::to_string(qq) + "): " +
                      std::to_string(d.gens.size()) + " generators, a=" + m.ids[m.a] + " b1=" + m.ids[m.b1] + ", " +
                      std::to_string(m.ops.size()) + " operations\n";
                if (with_cfa) out += ops_dump(m);
            }
        } else if (cable->parsed()) {
            ReducedParameters rp = reduce_parameters(pp, qq);
            CableResult res = compute_cable(in.complex, pp, rp.q0, rp.m + opt_framing.value_or(0), caps);
            bool all = !with_hfk && !with_euler;
            out = json ? dump(tensor_json(res, all || with_hfk, all || with_euler))
                       : text_cable(res, all || with_hfk, all || with_euler);
        } else if (thin->parsed()) {
            ThinnessOptions o;
            o.framing = opt_framing;
            o.caps = caps;
            WitnessReport rep = thinness_verdict(in.complex, in.name, pp, qq, o);
            out = json ? dump(witness_json(rep)) : text_thinness(rep);
        }
        std::cout << out;
        if (use_cache && !cache.store(key, out))
            std::cerr << "warning: could not write cache entry " << cache.path_for(key).string() << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
