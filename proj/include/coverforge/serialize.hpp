#pragma once

#include <string>

#include "coverforge/invariants.hpp"
#include "coverforge/openbook.hpp"
#include "coverforge/surgery.hpp"

#include <json.hpp>

namespace coverforge {

// Canonical key order, deterministic output.
using Json = nlohmann::ordered_json;

Json to_json(const BraidWord& b);
BraidWord braid_from_json(const Json& j);

Json to_json(const TwistWord& w);

Json to_json(const SurgeryDiagram& d);
SurgeryDiagram diagram_from_json_obj(const Json& j);

Json to_json(const InvariantReport& r);
Json to_json(const ComparisonVerdict& v);

QuasipositivityCertificate certificate_from_json(const Json& j, int strands);

std::string report_text(const InvariantReport& r);
std::string verdict_text(const ComparisonVerdict& v);

}  // namespace coverforge
