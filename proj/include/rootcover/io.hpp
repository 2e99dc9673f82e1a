#pragma once

#include <string>

#include "json.hpp"
#include "rootcover/hj.hpp"
#include "rootcover/invariants.hpp"
#include "rootcover/logchern.hpp"
#include "rootcover/toric.hpp"

namespace rootcover {

using Json = nlohmann::ordered_json;

inline constexpr const char* kBasePairSchema = "rootcover-basepair/1";
inline constexpr const char* kReportSchema = "rootcover-report/1";
inline constexpr const char* kResolutionSchema = "rootcover-resolution/1";

Json rat_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json to_json(const HJExpansion& hj);
Json to_json(const BasePair& pair);
Json to_json(const CyclicResolution& res);
Json to_json(const InvariantReport& report);

// Throws BadParams on schema mismatch or inconsistent tables.
BasePair basepair_from_json(const Json& j);
BasePair load_basepair(const std::string& path);

} // namespace rootcover
