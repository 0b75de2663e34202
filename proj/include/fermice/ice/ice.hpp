// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermice/partition.hpp"
#include "fermice/ring/multipoly.hpp"

namespace fermice::ice {

using Bits = std::vector<std::vector<std::uint8_t>>;

/// Rectangular six-vertex state with boundary λ.
///
/// Columns are stored left to right, so column index c carries the label
/// cols - c. Rows are stored top to bottom, so row index r carries the label
/// rows - r. vertical[r][c] is the edge above row r (r = rows is the bottom
/// boundary) and is 1 when it points up. horizontal[r][e] is the edge left of
/// column e (e = cols is the right boundary) and is 1 when it points right.
struct IceState {
  StrictPartition lambda;
  int rows = 0;
  int cols = 0;
  Bits vertical;
  Bits horizontal;

  friend bool operator==(const IceState&, const IceState&) = default;
};

/// Six admissible vertex configurations, numbered as the columns of the
/// weight table: 1 = (→,→,↓,↓), 2 = (←,←,↑,↑), 3 = (→,→,↑,↑),
/// 4 = (←,←,↓,↓), 5 = (←,→,↓,↑), 6 = (→,←,↑,↓), listed as (west, east,
/// north, south). Any other configuration gives nullopt.
std::optional<int> vertex_type(bool west_right, bool east_right, bool north_up, bool south_up);

/// Type of the vertex at row index r and column index c of the state.
std::optional<int> vertex_type_at(const IceState& s, int r, int c);

/// Checks boundaries and every vertex.
bool is_admissible(const IceState& s);

/// Vertical edges from the pattern, horizontal edges filled left to right.
/// Throws std::invalid_argument for an invalid pattern and std::logic_error
/// if the fill leaves the six admissible configurations.
IceState pattern_to_ice(const GTPattern& p);

/// Reads λ^{(i)} off the northern edges of row i. Throws
/// std::invalid_argument if the state is not admissible.
GTPattern ice_to_pattern(const IceState& s);

/// All admissible states with boundary λ, in pattern order.
std::vector<IceState> enumerate_states(const StrictPartition& lambda);

/// Counts of vertex types 1..6 (index 0 unused) over the whole state.
std::array<int, 7> type_histogram(const IceState& s);

/// Local weight x^x_power * {1 | t | t + 1}.
struct WeightTemplate {
  enum class TFactor : std::uint8_t { one, t, t_plus_one };
  int x_power = 0;
  TFactor t_factor = TFactor::one;

  friend bool operator==(const WeightTemplate&, const WeightTemplate&) = default;
  friend auto operator<=>(const WeightTemplate&, const WeightTemplate&) = default;

  ring::MultiPoly evaluate(const ring::Monomial& x, const ring::MultiPoly& t) const;
  std::string to_string(const std::string& x, const std::string& t) const;
};

/// Weight table indexed by vertex type - 1, together with the rule giving
/// the spectral index of the row labeled j in an n-row model.
struct WeightScheme {
  enum class RowIndex : std::uint8_t { direct, reversed };
  std::string name;
  std::array<WeightTemplate, 6> table;
  RowIndex row_index = RowIndex::direct;

  /// 1, t_j x_j, 1, x_j, x_j(t_j+1), 1 with index j.
  static WeightScheme delta();
  /// 1, x, t, x, x(t+1), 1 with index n - j + 1.
  static WeightScheme gamma();
  /// Every vertex weighs 1.
  static WeightScheme ones();
  /// Looks up delta, gamma, or ones; throws std::invalid_argument otherwise.
  static WeightScheme by_name(const std::string& name);

  int spectral_index(int row_label, int n) const;
};

/// Weight of the row labeled i (1 ≤ i ≤ rows), with (x_k, t_k) for the
/// scheme's spectral index k.
ring::MultiPoly row_weight(const IceState& s, int i, const WeightScheme& scheme);

/// Row weight with explicit spectral parameters.
ring::MultiPoly row_weight(const IceState& s, int i, const WeightScheme& scheme,
                           const ring::Monomial& x, const ring::MultiPoly& t);

ring::MultiPoly state_weight(const IceState& s, const WeightScheme& scheme);

/// Σ state_weight over enumerate_states(λ).
ring::MultiPoly partition_function(const StrictPartition& lambda, const WeightScheme& scheme);

/// Outcome of fitting a weight row to the six vertex configurations by
/// trying every bijection between configurations and table columns.
struct CalibrationResult {
  std::string scheme;
  int permutations_tried = 0;
  int distinct_tables = 0;
  /// Distinct tables that reproduce the row example.
  int matching_example = 0;
  /// Distinct tables that reproduce the example and every identity checked.
  int consistent = 0;
  /// Whether the transcribed table is among the consistent ones.
  bool transcribed_consistent = false;
  std::vector<std::array<WeightTemplate, 6>> consistent_tables;
};

/// Fits the Δ row: the row (5,3,2) over (4,3) must weigh x3²(t3+1), and the
/// global identity ∏(-1)^i(t_i+1)x_i·Z = factorized plus bracket must hold
/// for every strict λ with n ≤ n_max parts, λ_1 ≤ lambda1_max. When
/// row_identity is set the row-wise identity is also imposed.
CalibrationResult calibrate_delta(int n_max, int lambda1_max, bool row_identity);

/// Fits the Γ row: the same row must weigh x1²(t1+1)t1 with n = 3, and the
/// row-wise identity with the minus bracket must hold for n ≤ n_max.
CalibrationResult calibrate_gamma(int n_max, int lambda1_max);

/// (-1)^i (t_i+1) x_i · row_weight_Δ(A; i) == plus one-step bracket, and
/// (t_k+1) x_k^{-λ_1} · row_weight_Γ(A; i) == minus one-step bracket with
/// k = n - i + 1, for every row of the state.
bool row_identities_hold(const IceState& s);

}  // namespace fermice::ice
