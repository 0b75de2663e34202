// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used only by the tests.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "fermice/partition.hpp"
#include "fermice/ring/determinant.hpp"
#include "fermice/ring/divide.hpp"
#include "fermice/ring/multipoly.hpp"

namespace fermice::testing {

using ring::Monomial;
using ring::MultiPoly;
using ring::Scalar;
using ring::VarId;

/// Schoolbook product on raw exponent maps, bypassing Monomial arithmetic.
inline MultiPoly naive_multiply(const MultiPoly& a, const MultiPoly& b) {
  std::map<std::map<VarId, int>, Scalar> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::map<VarId, int> e;
      for (const auto& [v, p] : ma.factors()) e[v] += p;
      for (const auto& [v, p] : mb.factors()) e[v] += p;
      acc[e] += ca * cb;
    }
  }
  MultiPoly out;
  for (const auto& [e, c] : acc) {
    std::vector<Monomial::Factor> f(e.begin(), e.end());
    out.add_term(Monomial(std::move(f)), c);
  }
  return out;
}

/// Leibniz formula: Σ_σ sgn(σ) ∏ m[i][σ(i)].
inline MultiPoly permutation_det(const ring::PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    MultiPoly term(1L);
    for (std::size_t i = 0; i < n; ++i) term = naive_multiply(term, m[i][perm[i]]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Random polynomial over at most six variables of degree at most
/// max_degree per term; x variables may carry negative exponents.
inline MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int max_degree = 4,
                             bool laurent = false) {
  static const VarId kVars[] = {VarId::x(1), VarId::x(2), VarId::y(1),
                                VarId::t(1), VarId::t(2), VarId::z(1)};
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> var(0, 5);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> denom(1, 3);
  MultiPoly p;
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Monomial::Factor> f;
    for (int j = 0; j < d; ++j) f.emplace_back(kVars[var(rng)], 1);
    if (laurent && (rng() % 3 == 0)) f.emplace_back(VarId::x(1 + static_cast<int>(rng() % 2)), -2);
    p.add_term(Monomial(std::move(f)), Scalar(coeff(rng), denom(rng)));
  }
  return p;
}

/// Vertical edge matrices of every rectangular ice state with boundary λ,
/// found by trying all southern and internal horizontal edges row by row and
/// keeping rows whose vertices each have two arrows in and two out.
inline std::vector<std::vector<std::vector<int>>> brute_force_ice(const StrictPartition& lambda) {
  const int n = static_cast<int>(lambda.size());
  const int cols = n == 0 ? 0 : lambda[0];
  std::vector<int> top(static_cast<std::size_t>(cols), 0);
  for (int part : lambda) top[static_cast<std::size_t>(cols - part)] = 1;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> verticals{top};
  auto row_ok = [cols](const std::vector<int>& north, const std::vector<int>& south,
                       const std::vector<int>& h) {
    for (int c = 0; c < cols; ++c) {
      const auto uc = static_cast<std::size_t>(c);
      // Arrows into the vertex: west edge pointing right, east edge pointing
      // left, north edge pointing down, south edge pointing up.
      const int in = h[uc] + (1 - h[uc + 1]) + (1 - north[uc]) + south[uc];
      if (in != 2) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int r) -> void {
    if (r == n) {
      for (int b : verticals.back()) {
        if (b != 0) return;
      }
      out.push_back(verticals);
      return;
    }
    for (unsigned sm = 0; sm < (1U << cols); ++sm) {
      std::vector<int> south(static_cast<std::size_t>(cols));
      for (int c = 0; c < cols; ++c) south[static_cast<std::size_t>(c)] = (sm >> c) & 1U;
      const int inner = cols > 0 ? cols - 1 : 0;
      for (unsigned hm = 0; hm < (1U << inner); ++hm) {
        std::vector<int> h(static_cast<std::size_t>(cols + 1), 0);
        h.front() = 1;
        for (int e = 1; e < cols; ++e) h[static_cast<std::size_t>(e)] = (hm >> (e - 1)) & 1U;
        if (!row_ok(verticals.back(), south, h)) continue;
        verticals.push_back(south);
        self(self, r + 1);
        verticals.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

/// Level sequences λ = λ^{(n)}, λ^{(n̄)}, ..., λ^{(1)}, λ^{(1̄)} of the u-turn
/// model: each level is strict, each consecutive pair interleaves
/// (T_1 ≥ B_1 ≥ T_2 ≥ B_2 ≥ ...), and ℓ(λ^{(i)}) = i.
inline std::vector<std::vector<StrictPartition>> bend_patterns(const StrictPartition& lambda) {
  const int n = static_cast<int>(lambda.size());
  const int cols = n == 0 ? 0 : lambda[0];
  auto interleaves = [](const StrictPartition& top, const StrictPartition& bot) {
    if (bot.size() > top.size() || bot.size() + 1 < top.size()) return false;
    for (std::size_t j = 0; j < bot.size(); ++j) {
      if (bot[j] > top[j]) return false;
      if (j + 1 < top.size() && bot[j] < top[j + 1]) return false;
    }
    return true;
  };
  std::vector<StrictPartition> all;
  for (unsigned m = 0; m < (1U << cols); ++m) {
    StrictPartition p;
    for (int c = cols; c >= 1; --c) {
      if ((m >> (c - 1)) & 1U) p.push_back(c);
    }
    all.push_back(p);
  }
  std::vector<std::vector<StrictPartition>> out;
  std::vector<StrictPartition> seq{lambda};
  auto rec = [&](auto&& self) -> void {
    const int depth = static_cast<int>(seq.size());
    if (depth == 2 * n + 1) {
      if (seq.back().empty()) out.emplace_back(seq.begin(), seq.end() - 1);
      return;
    }
    for (const auto& next : all) {
      if (!interleaves(seq.back(), next)) continue;
      // depth even: next is λ^{(i-1)} with i = n - depth/2 + 1.
      if (depth % 2 == 0 && static_cast<int>(next.size()) != n - depth / 2) continue;
      seq.push_back(next);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// h_k(x_1..x_n) as the sum of all monomials x_{i_1}⋯x_{i_k}, i_1 ≤ ... ≤ i_k.
inline MultiPoly monomial_sum_h(int k, int n) {
  if (k < 0) return {};
  MultiPoly out;
  std::vector<int> idx(static_cast<std::size_t>(k), 1);
  while (true) {
    MultiPoly term(1L);
    for (int i : idx) term *= ring::X(i);
    out += term;
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n) --p;
    if (p < 0) break;
    const int v = idx[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < k; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

/// s_λ(x_1..x_n) as the ratio of alternants det x_i^{λ_j+n-j} / det x_i^{n-j}.
inline MultiPoly bialternant_schur(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.size()) > n) return {};
  ring::PolyMatrix num(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
  ring::PolyMatrix den = num;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int part = j < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(j)] : 0;
      num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ring::X(i + 1).pow(static_cast<unsigned>(part + n - j - 1));
      den[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ring::X(i + 1).pow(static_cast<unsigned>(n - j - 1));
    }
  }
  return *ring::exact_divide(permutation_det(num), permutation_det(den));
}

}  // namespace fermice::testing
