#pragma once
#include <string>

#include "cablefloer/thinness.hpp"
#include "json.hpp"

namespace cablefloer {

using Json = nlohmann::ordered_json;

Json grading_json(const Grading& g);
Json complex_summary_json(const std::string& name, const ModelComplex& c);
Json cfd_json(const TypeDModule& d, const GradedTypeD& g);
Json pattern_json(const PatternArithmetic& ar, const BorderedDiagram& d, const TypeAModule& m, bool with_ops);
// sections: generators and arrows always; ranks and euler when requested.
Json tensor_json(const CableResult& res, bool ranks, bool euler);
Json witness_json(const WitnessReport& rep);

std::string canonical_str(const CanonicalGrading& g);  // "(a;0,0;b)"
std::string dump(const Json& j);                        // two-space indent, trailing newline

}  // namespace cablefloer
