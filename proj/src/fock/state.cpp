// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/fock/state.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fermice::fock {

using ring::MultiPoly;

FockState FockState::vacuum(int charge) { return FockState(charge, {}); }

FockState FockState::from_modes(int floor, std::vector<Mode> modes) {
  std::sort(modes.begin(), modes.end(), std::greater<>());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] <= floor) throw std::invalid_argument("from_modes: mode at or below the floor");
    if (i > 0 && modes[i] == modes[i - 1]) throw std::invalid_argument("from_modes: repeated mode");
  }
  FockState s(floor, std::move(modes));
  s.absorb();
  return s;
}

void FockState::absorb() {
  while (!above_.empty() && above_.back() == floor_ + 1) {
    above_.pop_back();
    ++floor_;
  }
}

bool FockState::occupied(Mode k) const {
  if (k <= floor_) return true;
  return std::binary_search(above_.begin(), above_.end(), k, std::greater<>());
}

int FockState::count_above(Mode k) const {
  // above_ is decreasing: entries > k form a prefix.
  auto it = std::lower_bound(above_.begin(), above_.end(), k, std::greater<>());
  int n = static_cast<int>(it - above_.begin());
  if (k < floor_) n += floor_ - k;
  return n;
}

int FockState::occupied_between(Mode lo, Mode hi) const {
  if (hi <= lo + 1) return 0;
  return count_above(lo) - count_above(hi - 1);
}

std::optional<FockState> FockState::removed(Mode k) const {
  if (!occupied(k)) return std::nullopt;
  if (k > floor_) {
    FockState s = *this;
    s.above_.erase(std::find(s.above_.begin(), s.above_.end(), k));
    return s;
  }
  FockState s(k - 1, above_);
  for (Mode m = floor_; m > k; --m) s.above_.push_back(m);
  return s;
}

std::optional<FockState> FockState::added(Mode k) const {
  if (occupied(k)) return std::nullopt;
  FockState s = *this;
  if (k == floor_ + 1) {
    s.floor_ = k;
  } else {
    auto it = std::lower_bound(s.above_.begin(), s.above_.end(), k, std::greater<>());
    s.above_.insert(it, k);
  }
  s.absorb();
  return s;
}

Partition FockState::partition() const {
  const int l = charge();
  Partition p;
  p.reserve(above_.size());
  for (std::size_t i = 0; i < above_.size(); ++i) {
    p.push_back(above_[i] - (l - static_cast<int>(i)));
  }
  return canonical(p);
}

int FockState::energy() const { return weight(partition()); }

std::optional<StrictPartition> FockState::to_strict() const {
  if (floor_ < 0) return std::nullopt;
  StrictPartition s = above_;
  for (Mode m = floor_; m >= 1; --m) s.push_back(m);
  return s;
}

FockState vacuum(int charge) { return FockState::vacuum(charge); }

FockState state_from_partition(const Partition& lambda, int charge) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("state_from_partition: " + format_parts(lambda) +
                                " is not weakly decreasing and nonnegative");
  }
  const int n = static_cast<int>(lambda.size());
  std::vector<Mode> modes;
  modes.reserve(lambda.size());
  for (int i = 0; i < n; ++i) modes.push_back(charge + lambda[i] - i);
  return FockState::from_modes(charge - n, std::move(modes));
}

FockState state_from_strict(const StrictPartition& lambda) {
  if (!is_strict(lambda)) {
    throw std::invalid_argument("state_from_strict: " + format_parts(lambda) +
                                " is not a strict partition");
  }
  return FockState::from_modes(0, lambda);
}

FockVector::FockVector(const FockState& s, MultiPoly c) { add(s, c); }

void FockVector::add(const FockState& s, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly FockVector::coefficient(const FockState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? MultiPoly{} : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FockVector& FockVector::operator*=(const MultiPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

MultiPoly inner(const FockState& bra, const FockVector& v) { return v.coefficient(bra); }

}  // namespace fermice::fock
