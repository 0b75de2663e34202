// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fermice/ring/multipoly.hpp"

namespace fermice::ring {

/// Per-class degree caps. A term survives truncation when, for every capped
/// class, its total degree in that class is at most the cap.
struct SeriesTruncation {
  std::map<VarClass, int> caps;

  static SeriesTruncation on(VarClass c, int cap) { return SeriesTruncation{{{c, cap}}}; }

  std::optional<int> cap(VarClass c) const;
  bool keeps(const Monomial& m) const;
};

MultiPoly truncate(const MultiPoly& p, const SeriesTruncation& trunc);

/// Truncated product; truncation is applied to the result.
MultiPoly series_mul(const MultiPoly& a, const MultiPoly& b, const SeriesTruncation& trunc);

/// One factor numerator / denominator of a product series. The denominator
/// must be 1 - c*m with m of positive degree in some capped class.
struct SeriesFactor {
  MultiPoly numerator;
  MultiPoly denominator;
};

/// Truncated expansion of the product of factors. Throws
/// std::invalid_argument on a malformed denominator.
MultiPoly series_expand(const std::vector<SeriesFactor>& factors, const SeriesTruncation& trunc);

/// Truncated 1 / (1 - u) for u whose every term has positive capped degree.
MultiPoly series_geometric(const MultiPoly& u, const SeriesTruncation& trunc);

/// Truncated exp(p); p must have no constant term and every term must have
/// positive degree in some capped class.
MultiPoly series_exp(const MultiPoly& p, const SeriesTruncation& trunc);

/// Coefficient of the z-monomial `pattern`: the sum of c * (m without z) over
/// terms whose z-part equals pattern exactly.
MultiPoly coefficient_extract(const MultiPoly& p, const Monomial& pattern);

}  // namespace fermice::ring
