// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/evolution/hamiltonian.hpp"

#include <map>
#include <stdexcept>

#include "fermice/fock/operators.hpp"

namespace fermice::evolution {

using fock::FockState;
using fock::FockVector;
using ring::Monomial;
using ring::MultiPoly;
using ring::Scalar;

EvolutionSpec EvolutionSpec::plus(Monomial x, MultiPoly t) {
  return {Direction::plus, std::move(x), std::move(t)};
}

EvolutionSpec EvolutionSpec::minus(Monomial x, MultiPoly t) {
  return {Direction::minus, std::move(x), std::move(t)};
}

namespace {

Monomial monomial_pow(const Monomial& m, int e) {
  std::vector<Monomial::Factor> f = m.factors();
  for (auto& [v, p] : f) p *= e;
  return Monomial(std::move(f));
}

// Core expansion. coeffs[q] multiplies J_{sign*q}; energy window as in evolve.
FockVector expand(const FockVector& v, const std::vector<MultiPoly>& coeffs, bool leftward,
                  int bound, std::optional<fock::Mode> ceiling) {
  const int qmax = static_cast<int>(coeffs.size()) - 1;
  auto admissible = [&](int e) { return leftward ? e >= bound : e <= bound; };

  FockVector total;
  FockVector cur;
  for (const auto& [s, c] : v.terms()) {
    if (admissible(s.energy())) cur.add(s, c);
  }
  total += cur;
  for (long m = 1; !cur.is_zero(); ++m) {
    // Group targets per (state, q) before multiplying by s_q.
    std::map<FockState, std::map<int, MultiPoly>> acc;
    for (const auto& [s, c] : cur.terms()) {
      const int e = s.energy();
      const int room = leftward ? e - bound : bound - e;
      for (int q = 1; q <= std::min(room, qmax); ++q) {
        if (coeffs[q].is_zero()) continue;
        fock::for_each_J_move(leftward ? q : -q, s, leftward ? std::nullopt : ceiling,
                              [&](const FockState& t, int sign) {
                                MultiPoly& slot = acc[t][q];
                                if (sign > 0) {
                                  slot += c;
                                } else {
                                  slot -= c;
                                }
                              });
      }
    }
    FockVector next;
    const Scalar inv_m(1, m);
    for (auto& [t, per_q] : acc) {
      MultiPoly sum;
      for (auto& [q, c] : per_q) {
        if (!c.is_zero()) sum += c * coeffs[q];
      }
      next.add(t, sum * inv_m);
    }
    cur = std::move(next);
    total += cur;
  }
  return total;
}

}  // namespace

MultiPoly s_coeff(int q, const EvolutionSpec& spec) {
  if (q < 1) throw std::invalid_argument("s_coeff: q must be at least 1");
  const MultiPoly minus_t = -spec.t;
  MultiPoly c = (MultiPoly(1L) - minus_t.pow(static_cast<unsigned>(q))) * Scalar(1, q);
  const int sign = spec.direction == Direction::plus ? 1 : -1;
  return c.shifted(monomial_pow(spec.x, sign * q));
}

FockVector evolve(const FockVector& v, const EvolutionSpec& spec, int bound,
                  std::optional<fock::Mode> ceiling) {
  const bool leftward = spec.direction == Direction::plus;
  int qmax = 0;
  for (const auto& [s, c] : v.terms()) {
    qmax = std::max(qmax, leftward ? s.energy() - bound : bound - s.energy());
  }
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(qmax) + 1);
  for (int q = 1; q <= qmax; ++q) coeffs[q] = s_coeff(q, spec);
  return expand(v, coeffs, leftward, bound, ceiling);
}

FockVector apply_exp_phi(const FockVector& v, const EvolutionSpec& spec, int D) {
  if (D < 0) throw std::invalid_argument("apply_exp_phi: budget must be nonnegative");
  const bool leftward = spec.direction == Direction::plus;
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    const int bound = leftward ? s.energy() - D : s.energy() + D;
    out += evolve(FockVector(s, c), spec, bound);
  }
  return out;
}

FockVector apply_exp_currents(const FockVector& v, const std::vector<MultiPoly>& coeffs,
                              int bound) {
  return expand(v, coeffs, true, bound, std::nullopt);
}

}  // namespace fermice::evolution
