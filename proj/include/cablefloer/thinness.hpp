#pragma once
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cablefloer/tensor.hpp"

namespace cablefloer {

struct ReducedParameters {
    int64_t p = 0;
    int64_t q0 = 0;  // pattern slope, 2 <= q0 < p
    int64_t m = 0;   // framing shift, q = m p + q0
};
// Negative q is absorbed into the framing shift.
ReducedParameters reduce_parameters(int64_t p, int64_t q);

enum class WitnessCase { Eps1, Eps1Unstable, Eps0, T0, MirrorReduced };
std::string case_tag(WitnessCase c);

struct Witness {
    std::string element;  // tensor generator id, e.g. "g1|x3"
    std::string role;     // "a(x)xi2", "b1(x)kappa", ...
    CanonicalGrading computed;
    CanonicalGrading closed_form;  // the case analysis display, in terms of vx
    CanonicalGrading derived;      // the same computation with the diagram's winding w in place of vx + 1
    int64_t A = 0, M = 0;          // after normalization
    bool survives = false;         // verify_cycle_nonzero
};

struct WitnessPlan {
    WitnessCase kase = WitnessCase::Eps1;
    std::string a_partner;   // D generator paired with a
    std::string b1_partner;  // D generator paired with b1
    std::string note;
    CanonicalGrading closed_a, closed_b1;
    CanonicalGrading derived_a, derived_b1;
};
// Chooses the pair for companion data already packed into the cable result; force_unstable selects
// b1(x)mu1 as for tau = -1 regardless of the companion's tau.
WitnessPlan select_witnesses(const ModelComplex& k, const CableResult& res, bool force_unstable = false);

struct WitnessReport {
    std::string companion;
    int64_t p = 0, q = 0;  // as requested
    int64_t q0 = 0;        // pattern slope after reduction
    int64_t r = 0;         // framing of the type D module
    int64_t cable_q = 0;   // the cable is K_{p, cable_q}
    int64_t tau = 0, t = 0;
    int epsilon = 0;
    int64_t vx = 0;
    WitnessCase kase = WitnessCase::Eps1;
    std::string note;
    std::vector<Witness> witnesses;  // [a side, b1 side]
    int64_t lhs = 0;  // a1 - a2
    int64_t rhs = 0;  // b1 - b2 (u-exponents): thinness forces lhs == rhs
    bool pair_violates = false;
    std::set<int64_t> deltas;  // M - A over the HFK-hat table
    std::string verdict;       // "not-thin" or "inconclusive"
    std::string label;         // "certified" or "closed-form"
    RankTable hfk;
    // eps = -1 route through the mirror
    bool mirror_tried = false;
    bool mirror_supported = false;
    std::string mirror_verdict;
    std::string mirror_note;
};

struct ThinnessOptions {
    std::optional<int64_t> framing;  // framing added to the reduction shift; default picks t = 1
    Caps caps;
    bool force_unstable = false;
    bool try_mirror = true;
};

WitnessReport thinness_verdict(const ModelComplex& k, const std::string& name, int64_t p, int64_t q,
                               const ThinnessOptions& opt);

}  // namespace cablefloer
