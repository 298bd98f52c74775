#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cablefloer {

// Chord labels of the torus algebra. Composites are listed after the base chords.
enum class Chord : uint8_t { R1, R2, R3, R12, R23, R123 };

constexpr std::array<Chord, 6> kAllChords = {Chord::R1, Chord::R2, Chord::R3,
                                             Chord::R12, Chord::R23, Chord::R123};

std::string chord_name(Chord c);  // "1", "12", ...
std::optional<Chord> parse_chord(const std::string& s);

// Product of two chords when nonzero (rho1 rho2 = rho12 etc.).
std::optional<Chord> chord_product(Chord a, Chord b);

// Idempotent on the left (start) and right (end) of a chord.
// rho1, rho12, rho123 start at iota0; rho2, rho23 start at iota1; rho3 starts at iota0.
int chord_source_idem(Chord c);
int chord_target_idem(Chord c);

// Basis of A(T^2): i0, i1 and the six chords.
enum class Basis : uint8_t { I0, I1, R1, R2, R3, R12, R23, R123 };

class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement basis(Basis b);
    static AlgebraElement chord(Chord c);
    static AlgebraElement unit();

    bool contains(Basis b) const { return bits_ >> static_cast<int>(b) & 1u; }
    bool is_zero() const { return bits_ == 0; }
    uint8_t bits() const { return bits_; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    bool operator==(const AlgebraElement& o) const = default;

    std::string str() const;

private:
    uint8_t bits_ = 0;
};

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y);

// Element (m; i, j; n) of the extended grading group. Half-integers are stored doubled.
struct Grading {
    int64_t m2 = 0;  // 2m
    int64_t i2 = 0;  // 2i
    int64_t j2 = 0;  // 2j
    int64_t n = 0;

    bool operator==(const Grading&) const = default;
    auto operator<=>(const Grading&) const = default;

    // m, i, j as "p/2" or integer strings.
    std::string maslov_str() const;
    std::string i_str() const;
    std::string j_str() const;
    std::string str() const;
};

Grading make_grading(int64_t m2, int64_t i2, int64_t j2, int64_t n);  // validates i+j integral

Grading gr_identity();
Grading gr_lambda();  // (1;0,0;0)
Grading gr_u();       // (0;0,0;-1)
Grading gr_compose(const Grading& a, const Grading& b);
Grading gr_invert(const Grading& g);
Grading gr_pow(const Grading& g, int64_t k);
Grading gr_of_chord(Chord c);

// lambda^a u^b
struct CanonicalGrading {
    int64_t a = 0;
    int64_t b = 0;
    bool operator==(const CanonicalGrading&) const = default;
    auto operator<=>(const CanonicalGrading&) const = default;
};

// Normal form of the double coset <g> x <h>: the (a,b) with g^s x h^t = lambda^a u^b.
CanonicalGrading coset_reduce(const Grading& x, const Grading& g_period, const Grading& h_period);

// Exponents (s,t) used by coset_reduce; exposed for tests.
std::pair<int64_t, int64_t> coset_exponents(const Grading& x, const Grading& g_period,
                                            const Grading& h_period);

std::string half_str(int64_t doubled);

}  // namespace cablefloer
