#include "cablefloer/algebra.hpp"

#include "cablefloer/error.hpp"

namespace cablefloer {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Internal: return 1;
        case ErrorKind::Domain: return 2;
        case ErrorKind::Unsupported: return 3;
        case ErrorKind::ParseSyntax: return 4;
        case ErrorKind::ParseDuplicate: return 5;
        case ErrorKind::ParseDangling: return 6;
        case ErrorKind::Invalid: return 7;
        case ErrorKind::Budget: return 8;
    }
    return 1;
}

std::string chord_name(Chord c) {
    switch (c) {
        case Chord::R1: return "1";
        case Chord::R2: return "2";
        case Chord::R3: return "3";
        case Chord::R12: return "12";
        case Chord::R23: return "23";
        case Chord::R123: return "123";
    }
    return "?";
}

std::optional<Chord> parse_chord(const std::string& s) {
    for (Chord c : kAllChords)
        if (chord_name(c) == s) return c;
    return std::nullopt;
}

std::optional<Chord> chord_product(Chord a, Chord b) {
    if (a == Chord::R1 && b == Chord::R2) return Chord::R12;
    if (a == Chord::R2 && b == Chord::R3) return Chord::R23;
    if (a == Chord::R12 && b == Chord::R3) return Chord::R123;
    if (a == Chord::R1 && b == Chord::R23) return Chord::R123;
    return std::nullopt;
}

int chord_source_idem(Chord c) {
    switch (c) {
        case Chord::R1:
        case Chord::R3:
        case Chord::R12:
        case Chord::R123: return 0;
        default: return 1;
    }
}

int chord_target_idem(Chord c) {
    switch (c) {
        case Chord::R2:
        case Chord::R12: return 0;
        default: return 1;
    }
}

namespace {

Basis chord_basis(Chord c) { return static_cast<Basis>(static_cast<int>(c) + 2); }

bool is_idem(Basis b) { return b == Basis::I0 || b == Basis::I1; }

Chord basis_chord(Basis b) { return static_cast<Chord>(static_cast<int>(b) - 2); }

std::optional<Basis> basis_mul(Basis x, Basis y) {
    if (is_idem(x) && is_idem(y)) {
        if (x == y) return x;
        return std::nullopt;
    }
    if (is_idem(x)) {
        int i = x == Basis::I0 ? 0 : 1;
        if (chord_source_idem(basis_chord(y)) == i) return y;
        return std::nullopt;
    }
    if (is_idem(y)) {
        int i = y == Basis::I0 ? 0 : 1;
        if (chord_target_idem(basis_chord(x)) == i) return x;
        return std::nullopt;
    }
    auto p = chord_product(basis_chord(x), basis_chord(y));
    if (!p) return std::nullopt;
    return chord_basis(*p);
}

}  // namespace

AlgebraElement AlgebraElement::basis(Basis b) {
    AlgebraElement e;
    e.bits_ = static_cast<uint8_t>(1u << static_cast<int>(b));
    return e;
}

AlgebraElement AlgebraElement::chord(Chord c) { return basis(chord_basis(c)); }

AlgebraElement AlgebraElement::unit() { return basis(Basis::I0) + basis(Basis::I1); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement e;
    e.bits_ = bits_ ^ o.bits_;
    return e;
}

std::string AlgebraElement::str() const {
    static const char* names[] = {"i0", "i1", "r1", "r2", "r3", "r12", "r23", "r123"};
    std::string s;
    for (int k = 0; k < 8; ++k) {
        if (!(bits_ >> k & 1u)) continue;
        if (!s.empty()) s += "+";
        s += names[k];
    }
    return s.empty() ? "0" : s;
}

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (int a = 0; a < 8; ++a) {
        if (!x.contains(static_cast<Basis>(a))) continue;
        for (int b = 0; b < 8; ++b) {
            if (!y.contains(static_cast<Basis>(b))) continue;
            if (auto p = basis_mul(static_cast<Basis>(a), static_cast<Basis>(b)))
                out = out + AlgebraElement::basis(*p);
        }
    }
    return out;
}

std::string half_str(int64_t d) {
    if (d % 2 == 0) return std::to_string(d / 2);
    return std::to_string(d) + "/2";
}

std::string Grading::maslov_str() const { return half_str(m2); }
std::string Grading::i_str() const { return half_str(i2); }
std::string Grading::j_str() const { return half_str(j2); }

std::string Grading::str() const {
    return "(" + maslov_str() + ";" + i_str() + "," + j_str() + ";" + std::to_string(n) + ")";
}

Grading make_grading(int64_t m2, int64_t i2, int64_t j2, int64_t n) {
    if ((i2 + j2) % 2 != 0) throw Error(ErrorKind::Internal, "grading with i+j not integral");
    return Grading{m2, i2, j2, n};
}

Grading gr_identity() { return {}; }
Grading gr_lambda() { return {2, 0, 0, 0}; }
Grading gr_u() { return {0, 0, 0, -1}; }

Grading gr_compose(const Grading& a, const Grading& b) {
    // (i1 j2 - i2 j1) with doubled entries is det/4; doubled maslov needs det/2.
    int64_t det = a.i2 * b.j2 - b.i2 * a.j2;
    if (det % 2 != 0) throw Error(ErrorKind::Internal, "non-half-integral maslov in product");
    return {a.m2 + b.m2 + det / 2, a.i2 + b.i2, a.j2 + b.j2, a.n + b.n};
}

Grading gr_invert(const Grading& g) { return {-g.m2, -g.i2, -g.j2, -g.n}; }

Grading gr_pow(const Grading& g, int64_t k) { return {g.m2 * k, g.i2 * k, g.j2 * k, g.n * k}; }

Grading gr_of_chord(Chord c) {
    switch (c) {
        case Chord::R1: return {-1, 1, -1, 0};
        case Chord::R2: return {-1, 1, 1, 0};
        case Chord::R3: return {-1, -1, 1, 0};
        case Chord::R12:
            return gr_compose(gr_lambda(), gr_compose(gr_of_chord(Chord::R2), gr_of_chord(Chord::R1)));
        case Chord::R23:
            return gr_compose(gr_lambda(), gr_compose(gr_of_chord(Chord::R3), gr_of_chord(Chord::R2)));
        case Chord::R123:
            return gr_compose(gr_lambda(), gr_compose(gr_of_chord(Chord::R3), gr_of_chord(Chord::R12)));
    }
    throw Error(ErrorKind::Internal, "unknown chord");
}

std::pair<int64_t, int64_t> coset_exponents(const Grading& x, const Grading& g, const Grading& h) {
    // s*g + t*h = -x on the spinc part
    int64_t det = g.i2 * h.j2 - g.j2 * h.i2;
    if (det == 0) throw Error(ErrorKind::Domain, "coset reduction undefined: dependent periods");
    int64_t sn = -x.i2 * h.j2 + x.j2 * h.i2;
    int64_t tn = -g.i2 * x.j2 + g.j2 * x.i2;
    if (sn % det != 0 || tn % det != 0)
        throw Error(ErrorKind::Domain, "coset reduction undefined: non-integral exponents for " + x.str());
    return {sn / det, tn / det};
}

CanonicalGrading coset_reduce(const Grading& x, const Grading& g, const Grading& h) {
    auto [s, t] = coset_exponents(x, g, h);
    Grading r = gr_compose(gr_compose(gr_pow(g, s), x), gr_pow(h, t));
    if (r.i2 != 0 || r.j2 != 0) throw Error(ErrorKind::Internal, "coset reduction left spinc part");
    if (r.m2 % 2 != 0)
        throw Error(ErrorKind::Domain, "coset reduction gives half-integral lambda exponent for " + x.str());
    return {r.m2 / 2, -r.n};
}

}  // namespace cablefloer
