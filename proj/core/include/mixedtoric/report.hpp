#ifndef MIXEDTORIC_REPORT_HPP
#define MIXEDTORIC_REPORT_HPP

#include <json.hpp>

#include "mixedtoric/j10.hpp"
#include "mixedtoric/resolution.hpp"

namespace mixedtoric {

using Json = nlohmann::ordered_json;

/// Newton polyhedron, dual diagram, subdivision, homogeneity certificates,
/// face functions: the static analysis of one polynomial.
Json analyze_report(const MixedPolynomial& f, const Fan2& fan);

Json resolution_to_json(const ResolutionReport& rep);

/// Face certificates and search statistics.
Json certify_report(const MixedPolynomial& f, const SearchConfig& cfg);

Json sweep_to_json(const SweepReport& rep);

Json family_table_json(const std::vector<FamilyRow>& rows);

}  // namespace mixedtoric

#endif
