#pragma once
#include <map>
#include <string>
#include <vector>

#include "cablefloer/algebra.hpp"
#include "cablefloer/cfk.hpp"

namespace cablefloer {

enum class DRole { Xi, Eta, XiEta, Kappa, HChain, Mu };
std::string role_name(DRole r);

struct DGenerator {
    std::string id;
    int idem = 0;
    DRole role = DRole::Xi;
    int chain = 0;  // pair index (1-based) for kappa/hchain
    int pos = 0;    // position inside the chain (1-based); 0 for iota0 generators
};

struct DArrow {
    size_t src = 0;
    size_t dst = 0;
    Chord label = Chord::R1;
};

struct TypeDModule {
    std::vector<DGenerator> gens;
    std::vector<DArrow> arrows;
    int64_t r = 0;
    int64_t t = 0;
    std::string xi0;
    std::string eta0;
    ModelComplex basis;  // companion complex rewritten in the simplified basis
    SimultaneousBasis simplified;

    size_t index(const std::string& id) const;
};

TypeDModule build_cfd(const ModelComplex& c, int64_t r);

struct TypeDReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

TypeDReport check_typeD(const TypeDModule& d);

struct GradedTypeD {
    std::vector<Grading> gr;  // representative per generator
    Grading period;           // right period h used for reduction (derived from the module's loops)
    Grading stated_period;     // lambda^-1 gr(rho12)^-1 gr(rho23)^-r
    bool stated_period_consistent = false;
    std::vector<int64_t> loop_exponents;  // h-exponents of non-tree arrows
};

Grading cfd_period(int64_t r);        // lambda^-1 gr(rho23)^-r gr(rho12)^-1
Grading cfd_stated_period(int64_t r);  // lambda^-1 gr(rho12)^-1 gr(rho23)^-r
Grading iota0_grading(int64_t A, int64_t M);

GradedTypeD grade_cfd(const TypeDModule& d);

}  // namespace cablefloer
