// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermice/partition.hpp"
#include "fermice/ring/multipoly.hpp"

namespace fermice::verify {

struct CaseFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string name;
  long cases = 0;
  std::vector<CaseFailure> failures;
  double seconds = 0;
  /// Findings worth reporting even on success.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty() && cases > 0; }
  /// Records a case; on mismatch stores the input and both values.
  void check(bool ok, const std::string& input, const std::string& expected,
             const std::string& actual);
  void check_equal(const ring::MultiPoly& expected, const ring::MultiPoly& actual,
                   const std::string& input);
  nlohmann::json to_json() const;
  /// One line: "<name>: PASS (<cases> cases, <seconds>s)" or FAIL.
  std::string summary() const;
};

/// Runs body against a fresh report and fills in the wall time.
SuiteReport timed_suite(const std::string& name, const std::function<void(SuiteReport&)>& body);

/// Σ_{σ ∈ S_n} (-1)^{ℓ(σ)} ∏_{ℓ=1}^{n-1} ∏_{k≤ℓ}(1 + y_ℓ z_{σ(k)}) ∏_{k>ℓ}(1 - z_{σ(k)} x_ℓ).
/// Throws std::invalid_argument unless 2 ≤ n ≤ 5.
ring::MultiPoly phat_poly(int n);

/// ∏_{i<n}(y_i + x_i) ∏_{i<j<n}(x_i + y_j) ∏_{i<j≤n}(z_i - z_j).
ring::MultiPoly phat_product(int n);

/// The same sum with y_ℓ replaced by t_ℓ x_ℓ, and its product form
/// x_1⋯x_{n-1} ∏(1+t_i) ∏_{i<j<n}(x_i + t_j x_j) ∏(z_i - z_j).
ring::MultiPoly p_poly(int n);
ring::MultiPoly p_product(int n);

/// Product form, y-substitution, z-antisymmetry, and z-freeness of the
/// quotient for each n.
SuiteReport phat_suite(const std::vector<int>& ns);

/// [J_q, ψ_m] = -ψ_{m+q} and [J_q, ψ*_m] = ψ*_{m-q} for 1 ≤ |q| ≤ q_max, all
/// m in [-window, window], on every basis state whose occupancy differs
/// agrees with a full sea below -window and is arbitrary inside the window.
SuiteReport commutation_suite(int q_max, int window);

/// Wick determinant identity over a fixed catalog of index configurations
/// for n = 2, 3 at several charges, with e^{H} specialized to one x.
SuiteReport wick_suite();

/// ⟨μ;n|e^{H}|λ;n⟩ under t_q = (1/q)Σx_i^q against the Jacobi-Trudi
/// determinant and the tableau sum, all λ, μ in the rows × max_part box and
/// 1..max_vars variables.
SuiteReport jacobi_trudi_suite(int rows, int max_part, int max_vars);

/// One-step plus bracket against (-1)^n det h[x|tx] for every strict λ with
/// n ≤ n_max, λ_1 ≤ lambda1_max and every strict μ with n-1 parts ≤ λ_1.
/// The shifted alignment (|λ⟩ = |λ-ρ; n⟩, indices λ_q - μ_p) is asserted;
/// the literal alignment (indices λ_q - μ_p - q + p + 1) is reported.
SuiteReport tokuyama_super_suite(int n_max, int lambda1_max);

/// Oracle = closed form on both sides (k = λ_1 + 1, λ_1 + 2) for every
/// strict λ in range and every strict candidate μ.
SuiteReport one_step_suite(int n_max, int lambda1_max);

/// chain = factorized (and the Fock chain up to fock_n_max) in range, plus
/// the given n = 4 spot shapes.
SuiteReport chain_suite(int n_max, int lambda1_max, int fock_n_max,
                           const std::vector<StrictPartition>& spots);

/// State counts, row identities, and the global Δ identity for every strict
/// λ in range.
SuiteReport ice_suite(int n_max, int lambda1_max);

/// Weight-table fit: both row examples reproduced and a unique consistent
/// table for Δ and Γ with n ≤ n_max.
SuiteReport calibration_suite(int n_max, int lambda1_max);

/// Row-pair factorization on every state of each λ and on the displayed
/// (5,3,2) state, plus the length dichotomy.
SuiteReport bend_suite(const std::vector<StrictPartition>& lambdas);

/// Truncated Cauchy determinant identity for each n at z-degree ≤ degree.
SuiteReport cauchy_suite(const std::vector<int>& ns, int degree);

/// Seeded random checks, `cases` each.
SuiteReport anticommutation_suite(int cases, std::uint64_t seed);
SuiteReport current_algebra_suite(int cases, std::uint64_t seed);
SuiteReport modewise_commutator_suite(int cases, std::uint64_t seed);
SuiteReport ring_axioms_suite(int cases, std::uint64_t seed);

/// Enumerate / chain / determinant values of Z_Δ for λ = ρ + (k, 0, ...).
struct BenchRow {
  StrictPartition lambda;
  std::string method;
  double seconds = 0;
  std::size_t terms = 0;
  std::size_t states = 0;
};
struct BenchResult {
  std::vector<BenchRow> rows;
  bool agree = true;
  std::vector<std::string> disagreements;
};
BenchResult bench_family(int n, int k_max, int repetitions);

/// Z_Δ by the three methods: ice enumeration, chain of closed one-step
/// brackets, and the factorized determinant form, each divided by
/// ∏(-1)^i(t_i+1)x_i.
ring::MultiPoly z_delta_chain(const StrictPartition& lambda);
ring::MultiPoly z_delta_determinant(const StrictPartition& lambda);
/// Z_Γ = chain minus bracket / ∏(t_i+1)x_i^{-λ_1}, and its factorized form.
ring::MultiPoly z_gamma_chain(const StrictPartition& lambda);
ring::MultiPoly z_gamma_determinant(const StrictPartition& lambda);

/// Suite names accepted by run_suite, in run order for "all".
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  int n_max = 3;
  int lambda1_max = 5;
  /// Smaller ranges that finish in well under a minute.
  bool quick = false;
  /// phat sizes when set.
  std::vector<int> phat_ns;
  int cases = 1000;
  std::uint64_t seed = 20260101;
};

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace fermice::verify
