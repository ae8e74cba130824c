#pragma once

// JSON fragments for reports. Matrices are embedded as their canonical text
// form so a report is self-contained and byte-stable.

#include <string>

#include "json.hpp"
#include "rigx/amplify.hpp"
#include "rigx/codes.hpp"
#include "rigx/dims.hpp"
#include "rigx/dscore.hpp"
#include "rigx/extract.hpp"
#include "rigx/rigidity.hpp"

namespace rigx::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;
const char* tool_version();

/// {"schema", "tool_version", "op"} header every report starts with.
Json report_header(const std::string& op);

Json matrix_json(const FieldMatrix& m);
Json subspace_json(const SubspaceBasis& s);
Json inner_json(const DimWitness& w);
Json outer_json(const OuterResult& r);
Json rigidity_json(const RigidityCertificate& c);
Json strong_json(const StrongRigidityResult& s);
Json ds_json(const LinearDS& ds);
Json violations_json(const std::vector<DsViolation>& v);
Json sumset_json(const SumsetResult& r);
Json decomposition_json(const Decomposition& d);
Json extract_json(const ExtractOutcome& o);
Json span_check_json(const SpanCheck& c);
Json code_json(const CodeSpec& c);

std::string render(const Json& report);

}  // namespace rigx::cli
