// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "fermice/partition.hpp"
#include "fermice/ring/multipoly.hpp"

namespace fermice::fock {

/// The integer k stands for the half-integer mode k - 1/2.
using Mode = int;

/// Canonical fermion basis state (charged Maya diagram). Every mode k ≤ floor
/// is occupied, floor + 1 is empty, and `above` lists the remaining occupied
/// modes in strictly decreasing order.
class FockState {
 public:
  FockState() = default;

  static FockState vacuum(int charge);

  /// Occupied set = {k ≤ floor} ∪ modes. modes may be unsorted; duplicates
  /// or modes ≤ floor throw std::invalid_argument.
  static FockState from_modes(int floor, std::vector<Mode> modes);

  int floor() const { return floor_; }
  const std::vector<Mode>& above() const { return above_; }

  int charge() const { return floor_ + static_cast<int>(above_.size()); }
  bool occupied(Mode k) const;

  /// Number of occupied modes strictly greater than k.
  int count_above(Mode k) const;

  /// Number of occupied modes strictly between lo and hi.
  int occupied_between(Mode lo, Mode hi) const;

  Mode highest() const { return above_.empty() ? floor_ : above_.front(); }

  std::optional<FockState> removed(Mode k) const;
  std::optional<FockState> added(Mode k) const;

  /// λ with |this⟩ = |λ; charge⟩.
  Partition partition() const;
  int energy() const;

  /// λ strict with |this⟩ = |λ⟩, available when every mode ≤ 0 is occupied.
  std::optional<StrictPartition> to_strict() const;

  friend bool operator==(const FockState&, const FockState&) = default;
  friend auto operator<=>(const FockState&, const FockState&) = default;

 private:
  FockState(int floor, std::vector<Mode> above) : floor_(floor), above_(std::move(above)) {}
  void absorb();

  int floor_ = 0;
  std::vector<Mode> above_;
};

FockState vacuum(int charge);

/// |λ; ℓ⟩: modes ℓ + λ_i - i + 1 over vacuum(ℓ - n). Throws
/// std::invalid_argument unless λ is weakly decreasing and nonnegative.
FockState state_from_partition(const Partition& lambda, int charge);

/// |λ⟩ = |λ - ρ; n⟩: modes λ_i over vacuum(0). Throws unless λ is strict.
FockState state_from_strict(const StrictPartition& lambda);

/// Finite linear combination of basis states with polynomial coefficients.
class FockVector {
 public:
  using Terms = std::map<FockState, ring::MultiPoly>;

  FockVector() = default;
  FockVector(const FockState& s, ring::MultiPoly c = ring::MultiPoly(1L));  // NOLINT

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const FockState& s, const ring::MultiPoly& c);
  ring::MultiPoly coefficient(const FockState& s) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const ring::MultiPoly& c);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const ring::MultiPoly& c, FockVector v) { return v *= c; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Coefficient of the basis state bra in v.
ring::MultiPoly inner(const FockState& bra, const FockVector& v);

}  // namespace fermice::fock
