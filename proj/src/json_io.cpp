#include "polyvortex/json_io.hpp"

#include <cstdio>
#include <set>
#include <string>

#include "polyvortex/errors.hpp"

namespace polyvortex {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

ordered_json point_to_json(PlanePoint p) {
  return ordered_json::array({std::real(p), std::imag(p)});
}

void reject_unknown_keys(const ordered_json& j, const std::set<std::string>& allowed,
                         const std::string& what) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ValidationError("unknown key \"" + item.key() + "\" in " + what);
    }
  }
}

}  // namespace

ordered_json system_to_json(const VortexSystem& s) {
  ordered_json j;
  j["positions"] = ordered_json::array();
  for (const auto& z : s.positions()) j["positions"].push_back(point_to_json(z));
  j["vorticities"] = s.vorticities();
  return j;
}

VortexSystem system_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ValidationError("vortex system JSON must be an object");
  reject_unknown_keys(j, {"positions", "vorticities"}, "vortex system");
  if (!j.contains("positions") || !j.contains("vorticities")) {
    throw ValidationError("vortex system JSON needs \"positions\" and \"vorticities\"");
  }
  std::vector<PlanePoint> positions;
  for (const auto& p : j.at("positions")) {
    if (!p.is_array() || p.size() != 2) {
      throw ValidationError("each position must be a [x, y] pair");
    }
    positions.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  std::vector<double> vorticities = j.at("vorticities").get<std::vector<double>>();
  return VortexSystem(std::move(positions), std::move(vorticities));
}

std::string system_to_json_string(const VortexSystem& s) { return system_to_json(s).dump(); }

VortexSystem system_from_json_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(j);
}

ordered_json report_to_json(const EquilibriumReport& r) {
  ordered_json j;
  j["kind"] = to_string(r.kind);
  j["omega"] = r.omega;
  j["translation_velocity"] =
      r.translation_velocity ? point_to_json(*r.translation_velocity) : ordered_json(nullptr);
  j["center"] = r.center ? point_to_json(*r.center) : ordered_json(nullptr);
  j["residual"] = r.residual;
  return j;
}

ordered_json conserved_to_json(const ConservedQuantities& c) {
  ordered_json j;
  j["total_vorticity"] = c.total_vorticity;
  j["center_of_vorticity"] =
      c.center_of_vorticity ? point_to_json(*c.center_of_vorticity) : ordered_json(nullptr);
  j["hamiltonian"] = c.hamiltonian;
  j["angular_impulse"] = c.angular_impulse;
  return j;
}

}  // namespace polyvortex
