// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/fock/operators.hpp"

#include <algorithm>

namespace fermice::fock {

using ring::MultiPoly;

FockVector apply_create(Mode k, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (auto t = s.added(k)) out.add(*t, (s.count_above(k) % 2 == 0) ? c : -c);
  }
  return out;
}

FockVector apply_annihilate(Mode k, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    if (auto t = s.removed(k)) out.add(*t, (s.count_above(k) % 2 == 0) ? c : -c);
  }
  return out;
}

std::optional<Move> move_particle(const FockState& s, Mode from, Mode to) {
  if (from == to || !s.occupied(from) || s.occupied(to)) return std::nullopt;
  auto removed = s.removed(from);
  auto moved = removed->added(to);
  const int between = s.occupied_between(std::min(from, to), std::max(from, to));
  return Move{*moved, between % 2 == 0 ? 1 : -1};
}

FockVector apply_J(int q, const FockVector& v, std::optional<Mode> ceiling) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    for_each_J_move(q, s, ceiling, [&](const FockState& t, int sign) {
      out.add(t, sign > 0 ? c : -c);
    });
  }
  return out;
}

}  // namespace fermice::fock
