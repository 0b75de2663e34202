// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/evolution/brackets.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermice/fock/operators.hpp"
#include "fermice/symfun/symfun.hpp"

namespace fermice::evolution {

using fock::FockState;
using fock::FockVector;
using ring::Monomial;
using ring::MultiPoly;

namespace {

void require_step_shapes(const StrictPartition& mu, const StrictPartition& lambda) {
  if (!is_strict(lambda) || !is_strict(mu)) {
    throw std::invalid_argument("brackets need strict partitions, got lambda=" +
                                format_parts(lambda) + " mu=" + format_parts(mu));
  }
  if (lambda.empty() || mu.size() + 1 != lambda.size()) {
    throw std::invalid_argument("mu must have exactly one part fewer than lambda");
  }
}

void require_top_shape(const StrictPartition& lambda) {
  if (lambda.empty() || !is_strict(lambda)) {
    throw std::invalid_argument("lambda must be a nonempty strict partition, got " +
                                format_parts(lambda));
  }
}

// Energy of the charge-c state with modes top, top-1, ..., top-c+1 over
// vacuum(0): the largest energy of a state with full sea and modes ≤ top.
int max_energy(int top, int c) {
  int e = 0;
  for (int i = 0; i < c; ++i) e += top - i - (c - i);
  return e;
}

}  // namespace

StepStatistics interleave_statistics(const StrictPartition& lambda, const StrictPartition& mu) {
  require_step_shapes(mu, lambda);
  StepStatistics st;
  st.interleaves = true;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] == lambda[i + 1]) ++st.r;
    if (mu[i] == lambda[i]) ++st.l;
    if (lambda[i] > mu[i]) ++st.s;
    if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) st.interleaves = false;
  }
  return st;
}

MultiPoly one_step_closed_plus(const StrictPartition& mu, const StrictPartition& lambda,
                               const Monomial& x, const MultiPoly& t) {
  const StepStatistics st = interleave_statistics(lambda, mu);
  if (!st.interleaves) return {};
  const int n = static_cast<int>(lambda.size());
  MultiPoly v = t.pow(st.r) * (t + 1L).pow(st.s - st.r + 1);
  v = v.shifted(x.pow(weight(lambda) - weight(mu)));
  return n % 2 == 0 ? v : -v;
}

MultiPoly one_step_closed_minus(const StrictPartition& mu, const StrictPartition& lambda, int k,
                                const Monomial& x, const MultiPoly& t) {
  const StepStatistics st = interleave_statistics(lambda, mu);
  if (k <= lambda[0]) throw std::invalid_argument("annihilator index k must exceed lambda_1");
  if (!st.interleaves) return {};
  MultiPoly v = t.pow(st.l) * (t + 1L).pow(st.s - st.r + 1);
  return v.shifted(x.pow(weight(lambda) - weight(mu) - k));
}

MultiPoly one_step_oracle_plus(const StrictPartition& mu, const StrictPartition& lambda,
                               const Monomial& x, const MultiPoly& t) {
  require_step_shapes(mu, lambda);
  const FockVector start = fock::apply_annihilate(0, FockVector(fock::state_from_strict(lambda)));
  const FockState target = fock::state_from_strict(mu);
  const int bound = target.energy();
  if (start.terms().begin()->first.energy() < bound) return {};
  const FockVector w = evolve(start, EvolutionSpec::plus(x, t), bound);
  return fock::inner(target, w);
}

MultiPoly one_step_oracle_minus(const StrictPartition& mu, const StrictPartition& lambda, int k,
                                const Monomial& x, const MultiPoly& t) {
  require_step_shapes(mu, lambda);
  if (k <= lambda[0]) throw std::invalid_argument("annihilator index k must exceed lambda_1");
  const FockState bra = fock::state_from_strict(mu);
  const auto lifted = bra.added(k);
  if (!lifted) return {};
  const FockState source = fock::state_from_strict(lambda);
  if (lifted->energy() < source.energy()) return {};
  const int ceiling = std::max(k, mu.empty() ? k : mu[0]);
  const FockVector w =
      evolve(FockVector(source), EvolutionSpec::minus(x, t), lifted->energy(), ceiling);
  return fock::inner(bra, fock::apply_annihilate(k, w));
}

std::map<StrictPartition, MultiPoly> one_step_oracle_plus_all(const StrictPartition& lambda,
                                                              const Monomial& x,
                                                              const MultiPoly& t) {
  require_top_shape(lambda);
  const FockVector start = fock::apply_annihilate(0, FockVector(fock::state_from_strict(lambda)));
  const FockVector w = evolve(start, EvolutionSpec::plus(x, t), 0);
  std::map<StrictPartition, MultiPoly> out;
  for (const auto& [s, c] : w.terms()) {
    auto mu = s.to_strict();
    if (mu && mu->size() + 1 == lambda.size()) out.emplace(*mu, c);
  }
  return out;
}

std::map<StrictPartition, MultiPoly> one_step_oracle_minus_all(const StrictPartition& lambda,
                                                               int k, int max_part,
                                                               const Monomial& x,
                                                               const MultiPoly& t) {
  require_top_shape(lambda);
  if (k <= lambda[0]) throw std::invalid_argument("annihilator index k must exceed lambda_1");
  const int n = static_cast<int>(lambda.size());
  const int ceiling = std::max(k, max_part);
  const FockVector w = evolve(FockVector(fock::state_from_strict(lambda)),
                              EvolutionSpec::minus(x, t), max_energy(ceiling, n), ceiling);
  const FockVector u = fock::apply_annihilate(k, w);
  std::map<StrictPartition, MultiPoly> out;
  for (const auto& [s, c] : u.terms()) {
    auto mu = s.to_strict();
    if (mu && static_cast<int>(mu->size()) == n - 1 && (mu->empty() || (*mu)[0] <= max_part)) {
      out.emplace(*mu, c);
    }
  }
  return out;
}

std::vector<StepVars> default_vars(int n) {
  std::vector<StepVars> v;
  for (int i = 1; i <= n; ++i) v.push_back({Monomial::var(ring::VarId::x(i)), ring::T(i)});
  return v;
}

std::vector<StepVars> common_t_vars(int n, const MultiPoly& t) {
  std::vector<StepVars> v;
  for (int i = 1; i <= n; ++i) v.push_back({Monomial::var(ring::VarId::x(i)), t});
  return v;
}

namespace {

void require_vars(const StrictPartition& lambda, const std::vector<StepVars>& vars) {
  if (!is_strict(lambda)) {
    throw std::invalid_argument(format_parts(lambda) + " is not a strict partition");
  }
  if (vars.size() < lambda.size()) throw std::invalid_argument("need one (x, t) pair per part");
}

}  // namespace

MultiPoly chain_bracket(const StrictPartition& lambda, Direction side,
                        const std::vector<StepVars>& vars) {
  require_vars(lambda, vars);
  const int n = static_cast<int>(lambda.size());
  if (n == 0) return MultiPoly(1L);
  const int k = lambda[0] + 1;
  std::map<StrictPartition, MultiPoly> level{{lambda, MultiPoly(1L)}};
  for (int i = n; i >= 1; --i) {
    const StepVars& sv = side == Direction::plus ? vars[i - 1] : vars[n - i];
    std::map<StrictPartition, MultiPoly> next;
    for (const auto& [p, c] : level) {
      for (const auto& child : interleaving_children(p)) {
        MultiPoly step = side == Direction::plus ? one_step_closed_plus(child, p, sv.x, sv.t)
                                                 : one_step_closed_minus(child, p, k, sv.x, sv.t);
        if (step.is_zero()) continue;
        next[child] += c * step;
      }
    }
    level = std::move(next);
  }
  auto it = level.find(StrictPartition{});
  return it == level.end() ? MultiPoly{} : it->second;
}

MultiPoly chain_bracket_fock(const StrictPartition& lambda, Direction side,
                             const std::vector<StepVars>& vars) {
  require_vars(lambda, vars);
  const int n = static_cast<int>(lambda.size());
  FockVector v(fock::state_from_strict(lambda));
  if (side == Direction::plus) {
    for (int i = n; i >= 1; --i) {
      v = fock::apply_annihilate(0, v);
      v = evolve(v, EvolutionSpec::plus(vars[i - 1].x, vars[i - 1].t), 0);
    }
  } else {
    const int k = n == 0 ? 1 : lambda[0] + 1;
    for (int j = 1; j <= n; ++j) {
      const int charge = n - j + 1;
      v = evolve(v, EvolutionSpec::minus(vars[j - 1].x, vars[j - 1].t), max_energy(k, charge), k);
      v = fock::apply_annihilate(k, v);
    }
  }
  return fock::inner(fock::vacuum(0), v);
}

MultiPoly factorized_bracket(const StrictPartition& lambda, Direction side,
                             const std::vector<StepVars>& vars) {
  require_vars(lambda, vars);
  const int n = static_cast<int>(lambda.size());
  std::vector<MultiPoly> xs;
  for (int i = 0; i < n; ++i) xs.emplace_back(vars[i].x);
  MultiPoly out(1L);
  for (int i = 0; i < n; ++i) {
    const MultiPoly tp1 = vars[i].t + 1L;
    if (side == Direction::plus) {
      out *= xs[i] * tp1;
      if ((i + 1) % 2 == 1) out = -out;
    } else {
      out *= tp1.shifted(vars[i].x.pow(-lambda[0]));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out *= side == Direction::plus ? xs[i] + vars[j].t * xs[j] : xs[i] + vars[i].t * xs[j];
    }
  }
  symfun::AlphabetPair a;
  a.x = xs;
  return out * symfun::schur_jt(minus_rho(lambda), a);
}

}  // namespace fermice::evolution
