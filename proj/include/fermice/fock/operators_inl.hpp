// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace fermice::fock {

template <typename F>
void for_each_J_move(int q, const FockState& s, std::optional<Mode> ceiling, F&& f) {
  if (q == 0) throw std::invalid_argument("apply_J: q must be nonzero");
  const Mode floor = s.floor();
  const Mode top = s.highest();
  if (q > 0) {
    // Leftward: the landing mode is empty, hence above the floor.
    for (Mode to = top - q; to > floor; --to) {
      if (s.occupied(to) || !s.occupied(to + q)) continue;
      if (auto m = move_particle(s, to + q, to)) f(m->state, m->sign);
    }
  } else {
    const int d = -q;
    for (Mode from = top; from > floor - d; --from) {
      const Mode to = from + d;
      if (ceiling && to > *ceiling) continue;
      if (!s.occupied(from) || s.occupied(to)) continue;
      if (auto m = move_particle(s, from, to)) f(m->state, m->sign);
    }
  }
}

}  // namespace fermice::fock
