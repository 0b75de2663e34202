// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "fermice/fock/io.hpp"
#include "fermice/fock/operators.hpp"

using namespace fermice;
using namespace fermice::fock;
using ring::MultiPoly;

namespace {

// Random basis state: a full sea below `lo`, random occupancy in [lo, hi].
FockState random_state(std::mt19937_64& rng, int lo, int hi) {
  std::vector<Mode> modes;
  for (int k = lo; k <= hi; ++k) {
    if (rng() % 2) modes.push_back(k);
  }
  return FockState::from_modes(lo - 1, modes);
}

}  // namespace

TEST_CASE("vacua") {
  const FockState v0 = vacuum(0);
  CHECK(v0.occupied(0));
  CHECK(v0.occupied(-5));
  CHECK_FALSE(v0.occupied(1));
  CHECK(v0.charge() == 0);
  CHECK(vacuum(-1) == *v0.removed(0));
  CHECK(vacuum(2) == *v0.added(1)->added(2));
  CHECK(vacuum(2).charge() == 2);
  CHECK(maya_string(v0) == "…●●|○○…");
}

TEST_CASE("creation and annihilation") {
  const FockVector zero(vacuum(0));
  CHECK(apply_annihilate(1, apply_create(1, zero)) == zero);
  CHECK(apply_create(1, apply_create(1, zero)).is_zero());
  CHECK(apply_annihilate(1, zero).is_zero());

  const FockVector lam(state_from_strict({5, 3, 2}));
  const FockVector out = apply_annihilate(0, lam);
  REQUIRE(out.size() == 1);
  const auto& [s, c] = *out.terms().begin();
  CHECK(c == MultiPoly(-1L));
  CHECK(s == FockState::from_modes(-1, {5, 3, 2}));
  CHECK(s.charge() == 2);
}

TEST_CASE("partition states") {
  CHECK(state_from_strict({2, 1}) == vacuum(2));
  CHECK(state_from_partition({0, 0, 0}, 3) == vacuum(3));
  CHECK(state_from_partition({}, -2) == vacuum(-2));
  CHECK(state_from_strict({5, 3, 2}) == FockState::from_modes(0, {5, 3, 2}));
  CHECK(state_from_strict({5, 3, 2}).partition() == Partition{2, 1, 1});
  CHECK(state_from_partition({2, 1}, 0).partition() == Partition{2, 1});
  CHECK(state_from_partition({3, 1}, 2) == state_from_partition({3, 1, 0, 0}, 2));
  CHECK(*state_from_strict({6, 4, 1}).to_strict() == StrictPartition{6, 4, 1});
  CHECK_FALSE(vacuum(-1).to_strict().has_value());
  CHECK_THROWS_AS(state_from_partition({1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(state_from_strict({2, 2}), std::invalid_argument);
}

TEST_CASE("padding invariance") {
  for (int l = -3; l <= 3; ++l) {
    for (const auto& p : partitions_in_box(3, 3)) {
      Partition padded = p;
      padded.resize(p.size() + 2, 0);
      CHECK(state_from_partition(padded, l) == state_from_partition(p, l));
      CHECK(state_from_partition(p, l).partition() == p);
      CHECK(state_from_partition(p, l).charge() == l);
    }
  }
}

TEST_CASE("inner product") {
  CHECK(inner(vacuum(0), FockVector(vacuum(0))) == MultiPoly(1L));
  CHECK(inner(vacuum(0), FockVector(vacuum(1))).is_zero());
  FockVector v = MultiPoly(5L) * FockVector(state_from_strict({4, 3}));
  v -= FockVector(state_from_strict({2, 1}));
  CHECK(inner(state_from_strict({4, 3}), v) == MultiPoly(5L));
}

TEST_CASE("currents") {
  CHECK(apply_J(1, FockVector(vacuum(0))).is_zero());
  CHECK(apply_J(3, FockVector(vacuum(0))).is_zero());
  CHECK(apply_J(1, FockVector(state_from_partition({1}, 0))) == FockVector(vacuum(0)));
  CHECK(apply_J(1, FockVector(state_from_strict({1}))).is_zero());
  const FockVector up = apply_J(-1, FockVector(vacuum(0)));
  CHECK(up == FockVector(FockState::from_modes(-1, {1})));
  CHECK(apply_J(-2, FockVector(vacuum(0))).size() == 2);
  CHECK_THROWS_AS(apply_J(0, FockVector(vacuum(0))), std::invalid_argument);
  // The particle at -3/2 jumps over -1/2.
  CHECK(apply_J(-2, FockVector(vacuum(0)), 1) ==
        FockVector(FockState::from_modes(-2, {1, 0}), MultiPoly(-1L)));
  CHECK(apply_J(-2, FockVector(vacuum(0)), 0).is_zero());
}

TEST_CASE("current moves carry the fermionic sign") {
  // From (5,3,2): move 5 -> 1 passes over 3 and 2.
  const FockState s = state_from_strict({5, 3, 2});
  const FockVector v = apply_J(4, FockVector(s));
  CHECK(v.coefficient(state_from_strict({3, 2, 1})) == MultiPoly(1L));
  // ψ*_b ψ_a computed with the creation/annihilation operators.
  for (int a = -2; a <= 6; ++a) {
    for (int b = -2; b <= 6; ++b) {
      if (a == b) continue;
      const FockVector ref = apply_create(b, apply_annihilate(a, FockVector(s)));
      auto m = move_particle(s, a, b);
      if (!m) {
        CHECK(ref.is_zero());
      } else {
        CHECK(ref == MultiPoly(static_cast<long>(m->sign)) * FockVector(m->state));
      }
    }
  }
}

TEST_CASE("anticommutation relations") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const FockVector v(random_state(rng, -4, 4));
    for (int a = -8; a <= 8; a += 3) {
      for (int b = -8; b <= 8; b += 2) {
        CHECK((apply_annihilate(a, apply_annihilate(b, v)) +
               apply_annihilate(b, apply_annihilate(a, v)))
                  .is_zero());
        CHECK((apply_create(a, apply_create(b, v)) + apply_create(b, apply_create(a, v)))
                  .is_zero());
        const FockVector mixed =
            apply_annihilate(a, apply_create(b, v)) + apply_create(b, apply_annihilate(a, v));
        CHECK(mixed == (a == b ? v : FockVector{}));
      }
    }
  }
}

TEST_CASE("current algebra and charge conservation") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const FockState s = random_state(rng, -3, 3);
    const FockVector v(s);
    for (int m = 1; m <= 4; ++m) {
      for (int n = 1; n <= 4; ++n) {
        const FockVector lhs = apply_J(m, apply_J(-n, v)) - apply_J(-n, apply_J(m, v));
        CHECK(lhs == (m == n ? MultiPoly(static_cast<long>(m)) * v : FockVector{}));
      }
      for (int q : {m, -m}) {
        const FockVector moved = apply_J(q, v);
        for (const auto& [t, c] : moved.terms()) CHECK(t.charge() == s.charge());
      }
    }
  }
}

TEST_CASE("mode-wise commutators with currents") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const FockVector v(random_state(rng, -3, 3));
    for (int q = 1; q <= 3; ++q) {
      for (int m = -5; m <= 5; ++m) {
        CHECK(apply_J(q, apply_annihilate(m, v)) - apply_annihilate(m, apply_J(q, v)) ==
              FockVector{} - apply_annihilate(m + q, v));
        CHECK(apply_J(q, apply_create(m, v)) - apply_create(m, apply_J(q, v)) ==
              apply_create(m - q, v));
      }
    }
  }
}

TEST_CASE("state json") {
  const FockState s = FockState::from_modes(-2, {4, 1, 0});
  const auto j = state_to_json(s);
  CHECK(j.at("charge").get<int>() == s.charge());
  CHECK(state_from_json(j) == s);
  auto bad = j;
  bad["charge"] = 9;
  CHECK_THROWS_AS(state_from_json(bad), std::invalid_argument);
}
