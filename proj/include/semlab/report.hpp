#pragma once

#include <json.hpp>

#include "semlab/adversary.hpp"
#include "semlab/context.hpp"
#include "semlab/emulation.hpp"
#include "semlab/modal.hpp"
#include "semlab/oracle.hpp"
#include "semlab/referent.hpp"
#include "semlab/transparency.hpp"

// JSON encodings for report payloads. nlohmann::json objects keep keys in
// sorted order, which the canonical report format relies on. Naturals are
// rendered as decimal strings since they may exceed 64 bits.
namespace semlab {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

Json to_json(const Referent& r);
Json to_json(const Context& k);
Json to_json(const QueryTranscript& t);
Json to_json(const TransparencyReport& r);
Json to_json(const CanonicalRepresentation& r);
Json to_json(const RelationTable& t);
Json to_json(const AdversaryReport& r);
Json to_json(const ComplexityTable& t);
Json to_json(const WorldTable& t);
Json to_json(const VerificationReport& r);
Json to_json(const DiamondCounterexample& d);

// Two-space indented, LF line endings, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace semlab
