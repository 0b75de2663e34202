// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fermice/ice/ice.hpp"

namespace fermice::ice {

/// State of the u-turn model with 2n rows labeled n, n̄, ..., 1, 1̄ top to
/// bottom. Row index r = 2(n - i) is row i and r + 1 is row ī; the right
/// ends of the two rows are joined by a bend. Edge conventions follow
/// IceState; horizontal[r][cols] is the edge entering the bend.
struct BendIceState {
  StrictPartition lambda;
  int pairs = 0;
  int cols = 0;
  Bits vertical;
  Bits horizontal;
  /// bend_up[n - i] for the pair (i, ī): the bend carries the arrow from
  /// row ī up into row i.
  std::vector<std::uint8_t> bend_up;

  friend bool operator==(const BendIceState&, const BendIceState&) = default;
};

/// Levels λ^{(n)}, λ^{(n̄)}, ..., λ^{(1)}, λ^{(1̄)} read from the northern
/// edges of each row; λ^{(0)} = ∅ is implicit.
using BendLevels = std::vector<StrictPartition>;

bool is_admissible(const BendIceState& s);

/// Builds the state whose northern edges spell the levels. Throws
/// std::invalid_argument if the levels do not give an admissible state.
BendIceState levels_to_bend_state(const StrictPartition& lambda, const BendLevels& levels);

/// Throws std::invalid_argument if the state is not admissible.
BendLevels bend_levels(const BendIceState& s);

/// Every admissible state, found row by row from the top boundary, sorted
/// by levels.
std::vector<BendIceState> enumerate_nn_states(const StrictPartition& lambda);

/// ℓ(λ^{(i)}) = ℓ(λ^{(ī)}) = ℓ(λ^{(i-1)}) + 1 or
/// ℓ(λ^{(i)}) = ℓ(λ^{(ī)}) + 1 = ℓ(λ^{(i-1)}) + 1 for every pair.
bool length_dichotomy_holds(const BendIceState& s);

/// Rows i and ī together with their bend: Δ with (x_i, t) on row i, Γ with
/// (x_i^{-1}, t) on row ī, bend t·x_i up and x_i^{-1} down.
ring::MultiPoly nn_row_weight(const BendIceState& s, int i, const ring::MultiPoly& t);

ring::MultiPoly nn_state_weight(const BendIceState& s, const ring::MultiPoly& t);

/// Fock-space brackets for the pair (i, ī) with k = λ_1 + 1:
///   a1 = ⟨λ^{(ī)}| e^{φ+(x_i;t)} ψ_{-1/2} |λ^{(i)}⟩
///   a2 = ⟨λ^{(ī)}| e^{φ+(x_i;t)} |λ^{(i)}⟩
///   b1 = ⟨λ^{(i-1)}| ψ*_{-1/2} ψ_{k-1/2} e^{φ-(x_i^{-1};t)} |λ^{(ī)}⟩
///   b2 = ⟨λ^{(i-1)}| ψ_{k-1/2} e^{φ-(x_i^{-1};t)} |λ^{(ī)}⟩
struct RowPairBrackets {
  ring::MultiPoly a1, a2, b1, b2;
  /// (t+1)^2 times the row-pair weight.
  ring::MultiPoly scaled_weight;
  /// (t+1)^2 times the product of the two combined brackets.
  ring::MultiPoly scaled_product;
};

RowPairBrackets nn_row_brackets(const BendIceState& s, int i, const ring::MultiPoly& t);

/// True iff the row-pair weight equals the product of brackets with
/// α_1 = t/((-1)^i(t+1)), α_2 = x_i^{-1}, β_1 = (-1)^{i-1}/((t+1)x_i^{λ_1+1}),
/// β_2 = 1/((t+1)x_i^{λ_1}); compared after clearing (t+1)^2.
bool nn_row_factorization_check(const BendIceState& s, int i, const ring::MultiPoly& t);

/// The displayed 𝔠_NN^{(5,3,2)} state: levels (5,3,2), (4,2), (4,1), (3,1),
/// (2), ∅ with bends up, down, up.
BendIceState example_bend_state();

}  // namespace fermice::ice
