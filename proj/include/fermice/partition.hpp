// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace fermice {

/// Weakly decreasing nonnegative parts. Canonical form strips trailing zeros.
using Partition = std::vector<int>;

/// Strictly decreasing positive parts.
using StrictPartition = std::vector<int>;

bool is_partition(const std::vector<int>& parts);
bool is_strict(const std::vector<int>& parts);

Partition canonical(Partition p);
int weight(const std::vector<int>& parts);

/// λ - ρ for a strict λ with n parts, ρ = (n, ..., 1).
Partition minus_rho(const StrictPartition& lambda);

/// Parses "5,3,2" (empty string or "0" gives the empty partition). Throws
/// std::invalid_argument on malformed input; checks nothing about order.
std::vector<int> parse_parts(const std::string& text);
std::string format_parts(const std::vector<int>& parts);

/// μ_i ≥ ν_i for every i after zero padding.
bool contains(const Partition& mu, const Partition& nu);

/// All strict partitions with exactly n parts and largest part ≤ max_part,
/// in lexicographically decreasing order.
std::vector<StrictPartition> strict_partitions(int n, int max_part);

/// All partitions with at most rows parts, each ≤ max_part, decreasing lex.
std::vector<Partition> partitions_in_box(int rows, int max_part);

/// All partitions of size k with at most rows parts (rows < 0: unlimited).
std::vector<Partition> partitions_of(int k, int rows = -1);

/// Strict μ with λ.size() - 1 parts and λ_i ≥ μ_i ≥ λ_{i+1}.
std::vector<StrictPartition> interleaving_children(const StrictPartition& lambda);

/// Top-down rows λ^{(n)}, ..., λ^{(1)}; λ^{(0)} = ∅ is implicit.
struct GTPattern {
  std::vector<StrictPartition> rows;

  friend bool operator==(const GTPattern&, const GTPattern&) = default;
  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

  /// λ^{(i)} for 0 ≤ i ≤ n.
  const StrictPartition& level(int i) const;
  int n() const { return static_cast<int>(rows.size()); }
  bool valid() const;
};

/// All strict GT patterns with top row λ, in lexicographic order of rows.
std::vector<GTPattern> strict_gt_patterns(const StrictPartition& lambda);

}  // namespace fermice
