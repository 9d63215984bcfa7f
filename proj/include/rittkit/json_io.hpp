#pragma once

#include <json.hpp>

#include "rittkit/chevalley.hpp"
#include "rittkit/difference.hpp"
#include "rittkit/reduce.hpp"

namespace rittkit {

using Json = nlohmann::ordered_json;

// All JSON documents carry "schema": 1 at top level and render polynomials
// as canonical expression strings, so identical inputs give byte-identical
// output.

Json certificate_to_json(const ReductionCertificate& cert, const AutoreducedSet& A);
Json membership_to_json(const MembershipResult& m, const AutoreducedSet& A);
Json charset_to_json(const CharsetResult& r);
Json coherence_to_json(const CoherenceReport& r, const RingConfig& ring);
Json autoreduced_check_to_json(const AutoreducedCheck& c);
Json verdict_to_json(const ConsistencyVerdict& v);
Json lift_report_to_json(const LiftReport& r);
Json fiber_to_json(const FiberReport& r);
Json lift_obstruction_to_json(const LiftObstructionReport& r);

// Presentation file:
// {
//   "schema": 1,
//   "ring": {"derivations": 1, "field": "Q" | "F<p>" | "Q(t1..tk)",
//            "coeff_symbols": ["u", ...]},
//   "generators": ["g1", ...],
//   "levels": [{"relations": ["..."]}, ...],
//   "target": "..."
// }
// Level i expressions may mention the coefficient symbols and generators
// g1..gi in the CLI grammar.
Presentation presentation_from_json(const Json& j);
Presentation load_presentation(const std::string& path);

CoeffField field_from_string(const std::string& s);
std::string field_to_string(const CoeffField& f);

}  // namespace rittkit
