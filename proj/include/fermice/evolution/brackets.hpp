// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "fermice/evolution/hamiltonian.hpp"
#include "fermice/partition.hpp"

namespace fermice::evolution {

struct StepStatistics {
  int r = 0;  // #{i : μ_i = λ_{i+1}}
  int l = 0;  // #{i : μ_i = λ_i}
  int s = 0;  // #{i : λ_i > μ_i}
  bool interleaves = false;

  friend bool operator==(const StepStatistics&, const StepStatistics&) = default;
};

/// λ strict with n parts, μ strict with n - 1 parts; throws
/// std::invalid_argument otherwise.
StepStatistics interleave_statistics(const StrictPartition& lambda, const StrictPartition& mu);

/// ⟨μ| e^{φ+(x;t)} ψ_{-1/2} |λ⟩ by direct expansion in Fock space.
ring::MultiPoly one_step_oracle_plus(const StrictPartition& mu, const StrictPartition& lambda,
                                     const ring::Monomial& x, const ring::MultiPoly& t);

/// (-1)^n t^r (1+t)^{s-r+1} x^{|λ|-|μ|} on interleaving pairs, else 0.
ring::MultiPoly one_step_closed_plus(const StrictPartition& mu, const StrictPartition& lambda,
                                     const ring::Monomial& x, const ring::MultiPoly& t);

/// ⟨μ| ψ_{k-1/2} e^{φ-(x;t)} |λ⟩ by direct expansion. Throws
/// std::invalid_argument unless k > λ_1.
ring::MultiPoly one_step_oracle_minus(const StrictPartition& mu, const StrictPartition& lambda,
                                      int k, const ring::Monomial& x, const ring::MultiPoly& t);

/// t^l (1+t)^{s-r+1} x^{|λ|-|μ|-k} on interleaving pairs, else 0.
ring::MultiPoly one_step_closed_minus(const StrictPartition& mu, const StrictPartition& lambda,
                                      int k, const ring::Monomial& x, const ring::MultiPoly& t);

/// All nonzero ⟨μ| e^{φ+} ψ_{-1/2} |λ⟩ from a single expansion.
std::map<StrictPartition, ring::MultiPoly> one_step_oracle_plus_all(
    const StrictPartition& lambda, const ring::Monomial& x, const ring::MultiPoly& t);

/// All nonzero ⟨μ| ψ_{k-1/2} e^{φ-} |λ⟩ with μ_1 ≤ max_part from a single
/// expansion.
std::map<StrictPartition, ring::MultiPoly> one_step_oracle_minus_all(
    const StrictPartition& lambda, int k, int max_part, const ring::Monomial& x,
    const ring::MultiPoly& t);

/// Spectral parameters of one step.
struct StepVars {
  ring::Monomial x;
  ring::MultiPoly t;
};

/// (x_i, t_i) for i = 1..n.
std::vector<StepVars> default_vars(int n);
/// (x_i, t) with one shared t.
std::vector<StepVars> common_t_vars(int n, const ring::MultiPoly& t);

/// Sum over interleaving chains λ = λ^{(n)} ≻ ... ≻ λ^{(0)} = ∅ of products
/// of closed one-step values. plus: the step from λ^{(i)} uses vars[i-1];
/// minus: the step from λ^{(i)} uses vars[n-i] and k = λ_1 + 1.
ring::MultiPoly chain_bracket(const StrictPartition& lambda, Direction side,
                              const std::vector<StepVars>& vars);

/// The same bracket evaluated by applying the full operator product in Fock
/// space (no intermediate projection).
ring::MultiPoly chain_bracket_fock(const StrictPartition& lambda, Direction side,
                                   const std::vector<StepVars>& vars);

/// plus: ∏(-1)^i x_i(t_i+1) ∏_{i<j}(x_i + t_j x_j) s_{λ-ρ}(x);
/// minus: ∏ x_i^{-λ_1}(t_i+1) ∏_{i<j}(x_i + t_i x_j) s_{λ-ρ}(x).
ring::MultiPoly factorized_bracket(const StrictPartition& lambda, Direction side,
                                   const std::vector<StepVars>& vars);

}  // namespace fermice::evolution
