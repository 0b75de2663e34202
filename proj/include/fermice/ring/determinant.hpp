// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "fermice/ring/multipoly.hpp"

namespace fermice::ring {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

inline constexpr std::size_t kDefaultDetCap = 8;

/// Exact determinant by cofactor expansion along rows, memoized on the set of
/// remaining columns. Throws std::invalid_argument for a non-square matrix or
/// one larger than cap. The empty matrix has determinant 1.
MultiPoly poly_det(const PolyMatrix& m, std::size_t cap = kDefaultDetCap);

}  // namespace fermice::ring
