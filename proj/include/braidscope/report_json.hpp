#pragma once

#include "json.hpp"

#include "braidscope/classifier.hpp"
#include "braidscope/config_space.hpp"
#include "braidscope/hyperplanes.hpp"

namespace braidscope {

/// Bumped whenever a field changes meaning or disappears.
inline constexpr int kReportSchemaVersion = 1;

/// Objects use sorted keys and carry no floating point, so dump() is canonical.
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const HomologySummary& h);
nlohmann::json to_json(const PeripheralReport& r);
nlohmann::json to_json(const Witness& w);
nlohmann::json build_summary(const CubeComplex& x, const std::vector<Hyperplane>& hyperplanes);

/// Adds schema_version and the task name at top level.
nlohmann::json envelope(const std::string& task, nlohmann::json body);

}  // namespace braidscope
