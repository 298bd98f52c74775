#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cablefloer/laurent.hpp"

namespace cablefloer {

struct CfkGenerator {
    std::string id;
    int64_t A = 0;
    int64_t M = 0;
    bool operator==(const CfkGenerator&) const = default;
};

struct CfkArrow {
    size_t src = 0;
    size_t dst = 0;
    int64_t k = 0;  // U-power
    bool operator==(const CfkArrow&) const = default;
};

struct ModelComplex {
    std::vector<CfkGenerator> gens;
    std::vector<CfkArrow> arrows;

    std::optional<size_t> find(const std::string& id) const;
    size_t index(const std::string& id) const;  // throws if missing
    void add_gen(std::string id, int64_t A, int64_t M);
    void add_arrow(const std::string& src, const std::string& dst, int64_t k);
};

// Structural equality up to ordering of generators and arrows.
bool same_complex(const ModelComplex& a, const ModelComplex& b);

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate_complex(const ModelComplex& c);
void require_valid(const ModelComplex& c);  // throws Invalid with the joined report

bool is_vertical(const ModelComplex& c, const CfkArrow& a);
bool is_horizontal(const ModelComplex& c, const CfkArrow& a);

struct BasisPair {
    std::string src;
    std::string dst;
    int64_t length = 0;
};

struct SimplifiedBasis {
    enum class Direction { Vertical, Horizontal } direction = Direction::Vertical;
    std::vector<BasisPair> pairs;
    std::string distinguished;  // xi0 (vertical) or eta0 (horizontal)
};

// A basis that is vertically and horizontally simplified at once, with the complex
// rewritten in it. Generator ids of the new basis reuse the leading old generator's id.
struct SimultaneousBasis {
    ModelComplex complex;
    SimplifiedBasis vertical;
    SimplifiedBasis horizontal;
    std::string steps;  // which eliminations were needed ("none", "vertical", ...)
};

SimultaneousBasis simultaneous_basis(const ModelComplex& c);
SimplifiedBasis simplify_vertical(const ModelComplex& c);
SimplifiedBasis simplify_horizontal(const ModelComplex& c);

int64_t tau(const ModelComplex& c);
int64_t nu(const ModelComplex& c);
int epsilon(const ModelComplex& c);
// Structural epsilon from the simultaneous basis: +1 if xi0 is a horizontal target,
// -1 if it is a horizontal source, 0 if it is eta0.
int epsilon_structural(const ModelComplex& c);

ModelComplex mirror(const ModelComplex& c);

// HFK-hat of the companion (associated graded homology), keyed by (A, M).
std::map<std::pair<int64_t, int64_t>, int64_t> companion_hfk(const ModelComplex& c);
int64_t genus(const ModelComplex& c);
Laurent alexander_polynomial(const ModelComplex& c);

ModelComplex staircase_from_alexander(const Laurent& delta);

std::vector<std::string> catalog_names();
ModelComplex catalog_get(const std::string& name);

ModelComplex parse_complex(const std::string& text);
ModelComplex parse_complex_file(const std::string& path);
std::string emit_complex(const ModelComplex& c);

}  // namespace cablefloer
