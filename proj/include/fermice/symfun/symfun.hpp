// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fermice/partition.hpp"
#include "fermice/ring/multipoly.hpp"
#include "fermice/ring/series.hpp"

namespace fermice::symfun {

using ring::MultiPoly;

/// Alphabets x | y. Entries are arbitrary polynomials so that
/// specializations such as y = t x can be passed directly.
struct AlphabetPair {
  std::vector<MultiPoly> x;
  std::vector<MultiPoly> y;

  /// x_1..x_n | y_1..y_m.
  static AlphabetPair vars(int n, int m = 0);
};

/// Classical h_k of the alphabet; 0 for k < 0.
MultiPoly complete_h(int k, const std::vector<MultiPoly>& x);

/// Σ_i h_i(x) e_{k-i}(y).
MultiPoly complete_h(int k, const AlphabetPair& a);

/// e_j of the alphabet; 0 for j < 0 or j > size.
MultiPoly elementary_e(int j, const std::vector<MultiPoly>& vars);

/// h_0..h_kmax of x | y in one pass.
std::vector<MultiPoly> complete_h_table(int kmax, const AlphabetPair& a);

/// det_{p,q} h_{λ_q - μ_p - q + p}(x|y) with both shapes zero-padded to a
/// common length.
MultiPoly schur_jt(const Partition& lambda, const Partition& mu, const AlphabetPair& a);
MultiPoly schur_jt(const Partition& lambda, const AlphabetPair& a);

/// Sum of x^T over semistandard tableaux T of shape λ/μ with entries 1..n.
MultiPoly schur_tableaux(const Partition& lambda, const Partition& mu,
                         const std::vector<MultiPoly>& x);

/// μ ⊇ ν with |μ| = |ν| + i, μ/ν a vertical strip, at most cap_rows rows.
std::vector<Partition> pieri_e(const Partition& nu, int i, int cap_rows);

/// det{(1 - x_i z_j)^{-1}} · ∏_{i,j}(1 - z_i x_j) == ∏_{i<j}(x_i - x_j)(z_i - z_j)
/// as series truncated by trunc.
bool cauchy_check(int n, const ring::SeriesTruncation& trunc);

}  // namespace fermice::symfun
