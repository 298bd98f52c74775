#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cablefloer/cfd.hpp"
#include "cablefloer/cfk.hpp"
#include "cablefloer/laurent.hpp"
#include "cablefloer/pattern.hpp"

namespace cablefloer {

struct TensorGen {
    size_t x = 0;  // type A generator
    size_t y = 0;  // type D generator
    std::string id;
    CanonicalGrading cg;  // lambda exponent a, u exponent b
};

struct TensorArrow {
    size_t src = 0;
    size_t dst = 0;
    int64_t U = 0;
    bool operator==(const TensorArrow&) const = default;
    auto operator<=>(const TensorArrow&) const = default;
};

struct UComplex {
    std::vector<TensorGen> gens;
    std::vector<TensorArrow> arrows;  // sorted, nonzero mod 2
    bool graded = false;

    size_t index(const std::string& id) const;
};

// Label sequences of directed paths in a type D module, with their endpoint pairs (mod 2).
struct DPaths {
    std::map<std::vector<Chord>, std::map<std::pair<size_t, size_t>, int>> paths;
    int maxlen = 0;
    bool longer_exist = false;  // some path has more than maxlen arrows
    SeqFilter filter() const;
};
DPaths d_paths(const TypeDModule& d, int maxlen);

UComplex box_tensor(const TypeAModule& a, const TypeDModule& d, const DPaths& paths);
void attach_gradings(UComplex& c, const GradedTypeA& ga, const GradedTypeD& gd);

struct TensorReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};
TensorReport check_d_squared(const UComplex& c);
TensorReport check_grading_drops(const UComplex& c);

// Keys are (a, b) before normalization and (A, M) after.
using RankTable = std::map<std::pair<int64_t, int64_t>, int64_t>;

RankTable hfk_hat_raw(const UComplex& c);
// Homology of the complex with U = 1, binned by the lambda exponent.
std::map<int64_t, int64_t> u1_homology(const UComplex& c);

struct Normalization {
    int64_t a_star = 0;  // lambda exponent of the U = 1 generator
    int64_t d0 = 0;      // Alexander shift: A = d0 - b
};
Normalization normalization_for(const UComplex& c, const RankTable& raw);
RankTable normalize_gradings(const RankTable& raw, const Normalization& nz);
std::pair<int64_t, int64_t> normalize_one(const CanonicalGrading& cg, const Normalization& nz);

Laurent euler_poly(const RankTable& ranks);
bool rank_symmetric(const RankTable& ranks);
bool verify_cycle_nonzero(const UComplex& c, size_t elt);

// Whole pipeline for companion K with framing r and pattern (p, q); the cable is K_{p, q + p r}.
struct CableResult {
    PatternArithmetic ar;
    TypeAModule A;
    TypeDModule D;
    GradedTypeA gA;
    GradedTypeD gD;
    UComplex C;
    RankTable raw;
    RankTable hfk;  // (A, M) -> rank
    Normalization nz;
    Laurent euler;
    int chordlen_used = 0;
};
CableResult compute_cable(const ModelComplex& k, int64_t p, int64_t q, int64_t r, const Caps& caps);

}  // namespace cablefloer
