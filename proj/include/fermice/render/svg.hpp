// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "fermice/fock/state.hpp"
#include "fermice/ice/bend.hpp"
#include "fermice/ice/ice.hpp"
#include "fermice/partition.hpp"

namespace fermice::render {

/// Grid of rows × cols vertices with one arrowhead per edge. Arrowheads carry
/// class "arrow up|down|left|right"; columns are labelled λ-style from the
/// left (cols..1) and rows from the top (rows..1).
std::string ice_svg(const ice::IceState& s);

/// 2n stored rows joined in pairs by a u-turn on the right; each u-turn has
/// class "uturn up|down".
std::string bend_svg(const ice::BendIceState& s);

/// Triangular array of the pattern rows, each row indented by half a cell.
std::string pattern_svg(const GTPattern& p);

/// Sites from lowest - margin to highest + margin with the origin marked
/// between the modes -1/2 and 1/2. Filled circles are occupied.
std::string maya_svg(const fock::FockState& s, int margin = 3);

}  // namespace fermice::render
