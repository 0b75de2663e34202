// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "fermice/ice/bend.hpp"
#include "fermice/ice/ice.hpp"

namespace fermice::ice {

/// {"rows": [[5,3,2],[4,3],[3]]}, top row first.
nlohmann::json pattern_to_json(const GTPattern& p);
GTPattern pattern_from_json(const nlohmann::json& j);

/// {"lambda", "rows", "cols", "vertical_edges", "horizontal_edges",
/// "pattern"}; edge matrices are 0/1 arrays in storage order. Reading
/// rejects inadmissible states and a pattern that disagrees with the edges.
nlohmann::json state_to_json(const IceState& s);
IceState state_from_json(const nlohmann::json& j);

/// The rectangular fields plus "bends" ("up"/"down" per pair, top first);
/// "pattern" lists the 2n levels and "rows" is 2n.
nlohmann::json bend_state_to_json(const BendIceState& s);
BendIceState bend_state_from_json(const nlohmann::json& j);

}  // namespace fermice::ice
