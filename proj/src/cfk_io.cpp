#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "cablefloer/cfk.hpp"
#include "cablefloer/error.hpp"

namespace cablefloer {

namespace {

struct Token {
    std::string text;
    size_t col;  // 1-based
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

[[noreturn]] void fail(ErrorKind k, size_t line, size_t col, const std::string& msg) {
    throw Error(k, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

int64_t keyed_int(const Token& t, const std::string& key, size_t line, bool non_negative) {
    if (t.text.rfind(key + "=", 0) != 0) fail(ErrorKind::ParseSyntax, line, t.col, "expected " + key + "=<int>");
    const char* b = t.text.data() + key.size() + 1;
    const char* e = t.text.data() + t.text.size();
    int64_t v = 0;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) fail(ErrorKind::ParseSyntax, line, t.col, "bad integer in " + t.text);
    if (non_negative && (v < 0 || *b == '-')) fail(ErrorKind::ParseSyntax, line, t.col, key + " must be non-negative");
    return v;
}

void check_id(const Token& t, size_t line) {
    static const std::regex re("[A-Za-z0-9_]+");
    if (!std::regex_match(t.text, re)) fail(ErrorKind::ParseSyntax, line, t.col, "bad identifier '" + t.text + "'");
}

}  // namespace

ModelComplex parse_complex(const std::string& text) {
    ModelComplex c;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    bool header = false, arrows_started = false;
    std::set<std::string> ids;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto toks = split(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 2 || toks[0].text != "cfk" || toks[1].text != "v1")
                fail(ErrorKind::ParseSyntax, lineno, toks[0].col, "expected header 'cfk v1'");
            header = true;
            continue;
        }
        const std::string& kw = toks[0].text;
        if (kw == "gen") {
            if (arrows_started) fail(ErrorKind::ParseSyntax, lineno, toks[0].col, "gen line after arrow lines");
            if (toks.size() != 4) fail(ErrorKind::ParseSyntax, lineno, toks[0].col, "expected 'gen <id> A=<int> M=<int>'");
            check_id(toks[1], lineno);
            int64_t A = keyed_int(toks[2], "A", lineno, false);
            int64_t M = keyed_int(toks[3], "M", lineno, false);
            if (!ids.insert(toks[1].text).second)
                fail(ErrorKind::ParseDuplicate, lineno, toks[1].col, "duplicate generator id '" + toks[1].text + "'");
            c.add_gen(toks[1].text, A, M);
        } else if (kw == "arrow") {
            arrows_started = true;
            if (toks.size() != 4) fail(ErrorKind::ParseSyntax, lineno, toks[0].col, "expected 'arrow <src> <dst> U=<uint>'");
            check_id(toks[1], lineno);
            check_id(toks[2], lineno);
            int64_t k = keyed_int(toks[3], "U", lineno, true);
            for (int e = 1; e <= 2; ++e)
                if (!ids.count(toks[e].text))
                    fail(ErrorKind::ParseDangling, lineno, toks[e].col, "arrow endpoint '" + toks[e].text + "' is not a generator");
            c.add_arrow(toks[1].text, toks[2].text, k);
        } else {
            fail(ErrorKind::ParseSyntax, lineno, toks[0].col, "unknown keyword '" + kw + "'");
        }
    }
    if (!header) throw Error(ErrorKind::ParseSyntax, "1:1: missing header 'cfk v1'");
    require_valid(c);
    return c;
}

ModelComplex parse_complex_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Domain, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    try {
        return parse_complex(ss.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ":" + e.what());
    }
}

std::string emit_complex(const ModelComplex& c) {
    std::string s = "cfk v1\n";
    for (auto& g : c.gens)
        s += "gen " + g.id + " A=" + std::to_string(g.A) + " M=" + std::to_string(g.M) + "\n";
    for (auto& a : c.arrows)
        s += "arrow " + c.gens[a.src].id + " " + c.gens[a.dst].id + " U=" + std::to_string(a.k) + "\n";
    return s;
}

}  // namespace cablefloer
