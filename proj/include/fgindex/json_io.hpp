#pragma once

#include <json.hpp>

#include <string>

#include "fgindex/constructions.hpp"
#include "fgindex/index.hpp"
#include "fgindex/numtheory.hpp"
#include "fgindex/stallings.hpp"
#include "fgindex/whitehead.hpp"
#include "fgindex/word.hpp"

// JSON renderings of the core types, the versioned certificate/report
// documents emitted by the CLI, and a small structural validator for the
// shipped schemas.

namespace fgx::jsonio {

using nlohmann::json;

json word_to_json(const Word& w);
json agraph_to_json(const AGraph& g);
AGraph agraph_from_json(const json& j);
json cover_to_json(const CoverPermutations& c);
CoverPermutations cover_from_json(const json& j);
json tree_to_json(const SpanningTree& t);
json automorphism_to_json(const WhiteheadAutomorphism& a);
json primitivity_witness_to_json(const PrimitivityWitness& w);
json simplicity_witness_to_json(const SimplicityWitness& w);
json subgroup_basis_to_json(const SubgroupBasis& b);

// Documents carry a "schema" tag: fgindex.certificate/1, fgindex.report/1,
// fgindex.discrepancy/1, fgindex.cover/1, fgindex.construct/1.
json certificate_to_json(const IndexCertificate& c);
json report_to_json(const VerifyReport& r);
json glued_certificate_to_json(const GluedCyclesCertificate& c);
json power_basis_to_json(const PowerBasis& p);
json lemma_basis_to_json(const SubgroupBasis& b, int d);
json rs_report_to_json(const RosserSchoenfeldReport& r);
json bounds_scan_to_json(const BoundsScan& s);

// Discrepancy record: a computed value with its certificate against a
// recorded published value that disagrees.
json discrepancy_record(const std::string& word, std::int32_t published,
                        std::int32_t computed, const json& certificates,
                        const std::string& note);

// Structural validation against the subset of JSON Schema used by the
// files in schemas/: type, required, properties, items, enum, const.
// Returns true and clears *error on success.
bool validate_schema(const json& value, const json& schema,
                     std::string* error);

}  // namespace fgx::jsonio
