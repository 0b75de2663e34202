// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "fermice/fock/state.hpp"

namespace fermice::fock {

/// Maya diagram, lowest mode on the left, '|' between modes -1/2 and 1/2,
/// e.g. "…●●●|○○○…" for the vacuum. `margin` empty/filled sites are shown
/// beyond the interesting window on each side.
std::string maya_string(const FockState& s, int margin = 2);

/// {"charge": ℓ, "floor": f, "occupied_above_floor": [...]}; modes use the
/// integer k for k - 1/2.
nlohmann::json state_to_json(const FockState& s);
FockState state_from_json(const nlohmann::json& j);

std::string to_string(const FockVector& v);

}  // namespace fermice::fock
