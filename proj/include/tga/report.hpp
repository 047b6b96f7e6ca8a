#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "tga/classify.hpp"
#include "tga/cocycles.hpp"
#include "tga/errors.hpp"
#include "tga/groups.hpp"
#include "tga/twisted.hpp"

namespace tga::report {

using nlohmann::json;

json group_json(const FiniteGroup& g, const std::string& id);
json h2_json(const CohomologyBasis& basis, const std::string& id);

/// Regularity and semi-center report. For degenerate cocycles the
/// commutative flag comes from multiplying the basis out exactly, and phi is
/// omitted.
json analysis_json(const TwistedAlgebra& a, const std::string& id);

/// `{group, verdict, certificate:{kind, data}, classes_tested[, elapsed_ms]}`.
json verdict_json(const GroupPtr& g, const CentralTypeVerdict& v, bool timing);
json theorem_json(const TheoremReport& r, bool timing);
json prime_lemma_json(const std::vector<PrimeLemmaRow>& rows);

/// `{error: kind, message[, line, column | x, y, z | g, h | power]}`.
json error_json(const Error& e);
json error_json(const std::string& kind, const std::string& message);

}  // namespace tga::report
