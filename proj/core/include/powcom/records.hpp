#pragma once

#include <nlohmann/json.hpp>

#include "powcom/property.hpp"
#include "powcom/scan.hpp"

namespace powcom {

// Machine-readable forms of reports. Wall time is only included on request
// so that identical runs produce byte-identical records.

nlohmann::json to_json(const PropertyReport& report, bool include_timing = false);
nlohmann::json to_json(const ScanSummary& summary);
nlohmann::json to_json(const ScanReport& report, bool include_timing = false);

/// Checks that a record has every PropertyReport field with the right type.
bool is_valid_property_record(const nlohmann::json& record);

}  // namespace powcom
