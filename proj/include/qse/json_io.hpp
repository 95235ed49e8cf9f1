#pragma once

#include <json.hpp>
#include <string>

#include "qse/certificate.hpp"
#include "qse/instability.hpp"
#include "qse/verify.hpp"

namespace qse {

using Json = nlohmann::json;

// Canonical rendering: keys sorted, two-space indent, doubles printed with
// %.17g (round-trip exact), non-finite numbers as null, trailing newline.
// Byte-identical output for equal values, so runs can be diffed.
std::string canonical_json(const Json& j);

Json certificate_json(const StabilityCertificate& cert);
Json verdict_json(const ModelVariant& variant, double alpha, double Z, int N, int K,
                  const Verdict& verdict);
Json suite_json(const SuiteResult& result);

}  // namespace qse
