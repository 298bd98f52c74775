#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cablefloer/algebra.hpp"

namespace cablefloer {

struct PatternArithmetic {
    int64_t p = 0, q = 0;
    int64_t x = 0, y = 0, u = 0, v = 0;
    int64_t n_w = 0;      // vx + 1, as stated for the primitive periodic domain
    int64_t winding = 0;  // w-multiplicity realized by the synthesized diagram (= p)
};

PatternArithmetic decompose_pq(int64_t p, int64_t q);

struct Vec2 {
    double x = 0, y = 0;
};

struct Crossing {
    double tau = 0;  // parameter along one period of the lifted beta path
    int idem = 0;    // 0 on alpha0 (horizontal lines), 1 on alpha1 (vertical lines)
    Vec2 pt;
};

// Genus-1 bordered diagram in the universal cover: alpha0/alpha1 are the horizontal/vertical
// lattice lines, z sits at the lattice points (north-east sector), beta is one lift of a
// periodic polyline with pts.back() = pts.front() + (0,1).
struct BorderedDiagram {
    int64_t p = 0, q = 0;
    std::vector<Vec2> pts;
    Vec2 w;
    std::vector<Crossing> gens;
    int bigons_removed = 0;

    size_t period() const { return pts.size() - 1; }
    Vec2 point(double T) const;
    std::vector<Vec2> arc(double T1, double T2) const;
    std::string gen_id(size_t i) const { return "g" + std::to_string(i); }
};

BorderedDiagram build_diagram(int64_t p, int64_t q);

struct Caps {
    int chordlen = 8;
    int64_t wmult = 0;  // 0 means 3 * n_w
    bool operator==(const Caps&) const = default;
};

int64_t effective_wmult(const Caps& caps, const PatternArithmetic& ar);

struct AOp {
    size_t x = 0;
    std::vector<Chord> chords;
    size_t y = 0;
    int64_t U = 0;
    bool operator==(const AOp&) const = default;
    auto operator<=>(const AOp&) const = default;
};

// Restricts enumeration to chord sequences accepted by the filter (prefix-closed).
struct SeqFilter {
    std::function<bool(const std::vector<Chord>&)> prefix_ok;
    std::function<bool(const std::vector<Chord>&)> full_ok;
    std::function<bool(const std::vector<Chord>&)> extendable;  // some accepted sequence is longer
};

struct TypeAModule {
    int64_t p = 0, q = 0;
    std::vector<std::string> ids;
    std::vector<int> idem;
    std::vector<AOp> ops;  // sorted, nonzero mod 2
    size_t a = 0, b1 = 0;
    Caps caps;
    int64_t dropped_by_wmult = 0;  // counted (nonzero) operations above the w-multiplicity cap
    bool truncated = false;        // chord-length cap cut off a search branch that could still continue
};

TypeAModule enumerate_cfa(const BorderedDiagram& d, const PatternArithmetic& ar, const Caps& caps,
                          const SeqFilter* filter = nullptr);

// Locates a and b1 from the defining relations m3(a,3,2) = U^w a and m4(a,3,2,1) = U b1.
std::pair<size_t, size_t> distinguished_generators(const BorderedDiagram& d);

struct ClosedRelation {
    std::vector<Chord> chords;
    int64_t U = 0;
    std::string target;  // "a" or "b1"
};
std::vector<ClosedRelation> distinguished_relations(int64_t p, int64_t q);

struct AinfReport {
    size_t candidates = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
// A-infinity relations on sequences of length <= maxlen, ignoring outputs with U above maxU.
AinfReport check_ainf(const TypeAModule& m, int maxlen, int64_t maxU);

struct GradedTypeA {
    std::vector<Grading> gr;
    Grading period;        // g, from the a-loop
    Grading stated_period;  // u^-(vx+1) gr(rho23)
};
GradedTypeA grade_cfa(const TypeAModule& m, const PatternArithmetic& ar);

bool check_b1_property(const TypeAModule& m);
// No m(a, rho123, ...) and no U^0 operation into a from another generator.
bool check_a_conditions(const TypeAModule& m);

std::string ops_dump(const TypeAModule& m);
std::string diagram_svg(const BorderedDiagram& d, const TypeAModule* m = nullptr, int lift_periods = 1);

}  // namespace cablefloer
