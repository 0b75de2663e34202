// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "fermice/fock/state.hpp"
#include "fermice/ring/multipoly.hpp"

namespace fermice::evolution {

enum class Direction { plus, minus };

/// One discrete time step e^{φ±(x;t)}. plus moves particles to lower modes
/// (J_q, q ≥ 1), minus to higher modes (J_{-q}). x is a monomial so that
/// x^{-1} can be passed directly; t may be a symbol or a specialization.
struct EvolutionSpec {
  Direction direction = Direction::plus;
  ring::Monomial x;
  ring::MultiPoly t;

  static EvolutionSpec plus(ring::Monomial x, ring::MultiPoly t);
  static EvolutionSpec minus(ring::Monomial x, ring::MultiPoly t);
};

/// (1 - (-t)^q) / q * x^{±q}. Throws std::invalid_argument for q < 1.
ring::MultiPoly s_coeff(int q, const EvolutionSpec& spec);

/// Σ_m (1/m!) (Σ_q s_q J_{±q})^m v, keeping for each basis state of v only the
/// terms whose accumulated displacement is at most D.
fock::FockVector apply_exp_phi(const fock::FockVector& v, const EvolutionSpec& spec, int D);

/// Same expansion with an absolute energy window: plus keeps states with
/// energy ≥ bound, minus keeps energy ≤ bound. For minus, moves landing above
/// `ceiling` are also dropped; such states can never lose that particle.
fock::FockVector evolve(const fock::FockVector& v, const EvolutionSpec& spec, int bound,
                        std::optional<fock::Mode> ceiling = std::nullopt);

/// Plain exponential e^{Σ_q c_q J_q} for q ≥ 1 with caller-supplied
/// coefficients c_1..c_D (index 0 unused), used for Miwa-specialized times.
fock::FockVector apply_exp_currents(const fock::FockVector& v,
                                    const std::vector<ring::MultiPoly>& coeffs, int bound);

}  // namespace fermice::evolution
