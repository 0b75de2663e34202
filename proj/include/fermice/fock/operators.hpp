// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "fermice/fock/state.hpp"

namespace fermice::fock {

/// ψ*_{k-1/2}: creates mode k with sign (-1)^{#occupied modes > k}.
FockVector apply_create(Mode k, const FockVector& v);

/// ψ_{k-1/2}: annihilates mode k with sign (-1)^{#occupied modes > k}.
FockVector apply_annihilate(Mode k, const FockVector& v);

/// Signed result of a single move of the particle at `from` to the empty mode
/// `to`, i.e. ψ*_to ψ_from on a basis state. nullopt when blocked.
struct Move {
  FockState state;
  int sign;
};
std::optional<Move> move_particle(const FockState& s, Mode from, Mode to);

/// J_q for q ≠ 0: every single-particle move by q units to lower modes
/// (q > 0) or by -q units to higher modes (q < 0). For q < 0, moves landing
/// above `ceiling` are dropped when a ceiling is given. Throws
/// std::invalid_argument for q = 0.
FockVector apply_J(int q, const FockVector& v, std::optional<Mode> ceiling = std::nullopt);

/// Calls f(target, sign) for every legal J_q move out of the basis state s.
template <typename F>
void for_each_J_move(int q, const FockState& s, std::optional<Mode> ceiling, F&& f);

}  // namespace fermice::fock

#include "fermice/fock/operators_inl.hpp"
