#pragma once

#include "dgs/certify.hpp"
#include "dgs/f2.hpp"
#include "dgs/oracle.hpp"
#include "dgs/walk.hpp"

#include <json.hpp>

namespace dgs {

using Json = nlohmann::ordered_json;

// Integers of unbounded size are written as decimal strings.
Json to_json(const BigInt& z);
BigInt bigint_from_json(const Json& j);

Json to_json(const IntPolynomial& p);
Json to_json(const SmithNormalForm& s);
SmithNormalForm snf_from_json(const Json& j);
Json to_json(const BigIntMatrix& m);

/// Every field of the certificate; optional fields are null when absent.
Json to_json(const DgsCertificate& c);
DgsCertificate certificate_from_json(const Json& j);

Json to_json(const F2Polynomial& p);
Json to_json(const AnnihilationReport& r);
Json to_json(const LevelDivisibilityReport& r);
Json to_json(const oracle::HarnessReport& r);
Json to_json(const oracle::MateSearchResult& r);

} // namespace dgs
