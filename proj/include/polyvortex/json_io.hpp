#pragma once

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "polyvortex/dynamics.hpp"
#include "polyvortex/system.hpp"

namespace polyvortex {

/// Fixed 17-significant-digit float formatting for CSV output.
std::string format_double(double v);

/// {"positions": [[x,y],...], "vorticities": [...]}, field order fixed.
nlohmann::ordered_json system_to_json(const VortexSystem& s);

/// Parses the same schema; rejects unknown keys.
VortexSystem system_from_json(const nlohmann::ordered_json& j);

std::string system_to_json_string(const VortexSystem& s);
VortexSystem system_from_json_string(const std::string& text);

nlohmann::ordered_json report_to_json(const EquilibriumReport& r);

nlohmann::ordered_json conserved_to_json(const ConservedQuantities& c);

}  // namespace polyvortex
