// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/fock/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermice::fock {

std::string maya_string(const FockState& s, int margin) {
  const Mode lo = std::min(s.floor(), 0) - margin + 1;
  const Mode hi = std::max(s.highest(), 0) + margin;
  std::string out = "…";
  for (Mode k = lo; k <= hi; ++k) {
    if (k == 1) out += "|";
    out += s.occupied(k) ? "●" : "○";
  }
  return out + "…";
}

nlohmann::json state_to_json(const FockState& s) {
  return {{"charge", s.charge()}, {"floor", s.floor()}, {"occupied_above_floor", s.above()}};
}

FockState state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("floor") || !j.contains("occupied_above_floor")) {
    throw std::invalid_argument("state JSON needs floor and occupied_above_floor");
  }
  FockState s = FockState::from_modes(j.at("floor").get<int>(),
                                      j.at("occupied_above_floor").get<std::vector<Mode>>());
  if (j.contains("charge") && j.at("charge").get<int>() != s.charge()) {
    throw std::invalid_argument("state JSON charge is inconsistent with its modes");
  }
  return s;
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")|" + format_parts(s.partition()) + ";" +
           std::to_string(s.charge()) + ">";
  }
  return out;
}

}  // namespace fermice::fock
