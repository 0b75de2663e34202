// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "fermice/ring/multipoly.hpp"

namespace fermice::ring {

/// Returns r with p == q * r, or std::nullopt when q does not divide p in the
/// Laurent ring (with t- and y-class exponents kept nonnegative). Throws
/// std::domain_error when q is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q);

}  // namespace fermice::ring
