// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/symfun/symfun.hpp"

#include <algorithm>
#include <functional>

#include "fermice/ring/determinant.hpp"

namespace fermice::symfun {

using ring::VarId;

AlphabetPair AlphabetPair::vars(int n, int m) {
  AlphabetPair a;
  for (int i = 1; i <= n; ++i) a.x.push_back(MultiPoly::var(VarId::x(i)));
  for (int j = 1; j <= m; ++j) a.y.push_back(MultiPoly::var(VarId::y(j)));
  return a;
}

namespace {

// h_0..h_kmax over the alphabet by adding one variable at a time.
std::vector<MultiPoly> h_table(int kmax, const std::vector<MultiPoly>& x) {
  std::vector<MultiPoly> h(static_cast<std::size_t>(std::max(kmax, 0)) + 1);
  h[0] = MultiPoly(1L);
  for (const auto& v : x) {
    // h_k(.., v) = h_k(..) + v h_{k-1}(.., v)
    for (int k = 1; k <= kmax; ++k) h[k] += v * h[k - 1];
  }
  return h;
}

std::vector<MultiPoly> e_table(const std::vector<MultiPoly>& x) {
  std::vector<MultiPoly> e(x.size() + 1);
  e[0] = MultiPoly(1L);
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t j = n + 1; j >= 1; --j) e[j] += x[n] * e[j - 1];
  }
  return e;
}

}  // namespace

MultiPoly complete_h(int k, const std::vector<MultiPoly>& x) {
  if (k < 0) return {};
  return h_table(k, x)[k];
}

MultiPoly elementary_e(int j, const std::vector<MultiPoly>& vars) {
  if (j < 0 || j > static_cast<int>(vars.size())) return {};
  return e_table(vars)[j];
}

std::vector<MultiPoly> complete_h_table(int kmax, const AlphabetPair& a) {
  const auto hx = h_table(kmax, a.x);
  if (a.y.empty()) return hx;
  const auto ey = e_table(a.y);
  std::vector<MultiPoly> out(hx.size());
  for (int k = 0; k <= kmax; ++k) {
    for (int i = std::max(0, k - static_cast<int>(a.y.size())); i <= k; ++i) {
      out[k] += hx[i] * ey[k - i];
    }
  }
  return out;
}

MultiPoly complete_h(int k, const AlphabetPair& a) {
  if (k < 0) return {};
  return complete_h_table(k, a)[k];
}

MultiPoly schur_jt(const Partition& lambda, const Partition& mu, const AlphabetPair& a) {
  const std::size_t n = std::max(lambda.size(), mu.size());
  if (n == 0) return MultiPoly(1L);
  Partition l = lambda;
  Partition m = mu;
  l.resize(n, 0);
  m.resize(n, 0);
  const int kmax = std::max(0, l[0] + static_cast<int>(n));
  const auto h = complete_h_table(kmax, a);
  ring::PolyMatrix mat(n, std::vector<MultiPoly>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const int k = l[q] - m[p] - static_cast<int>(q) + static_cast<int>(p);
      if (k >= 0 && k <= kmax) mat[p][q] = h[k];
    }
  }
  return ring::poly_det(mat, std::max<std::size_t>(n, ring::kDefaultDetCap));
}

MultiPoly schur_jt(const Partition& lambda, const AlphabetPair& a) { return schur_jt(lambda, {}, a); }

MultiPoly schur_tableaux(const Partition& lambda, const Partition& mu,
                         const std::vector<MultiPoly>& x) {
  const int n = static_cast<int>(x.size());
  if (!contains(lambda, mu)) return {};
  // Cells of λ/μ in row-major order.
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const int start = r < mu.size() ? mu[r] : 0;
    for (int c = start; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::vector<std::vector<int>> filling(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) filling[r].assign(lambda[r], 0);

  MultiPoly total;
  std::vector<int> content(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      MultiPoly term(1L);
      for (int i = 0; i < n; ++i) {
        if (content[i] > 0) term *= x[i].pow(static_cast<unsigned>(content[i]));
      }
      total += term;
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    const int row_start = r < static_cast<int>(mu.size()) ? mu[r] : 0;
    if (c > row_start) lo = std::max(lo, filling[r][c - 1]);
    if (r > 0) {
      const int above_start = r - 1 < static_cast<int>(mu.size()) ? mu[r - 1] : 0;
      if (c >= above_start) lo = std::max(lo, filling[r - 1][c] + 1);
    }
    for (int v = lo; v <= n; ++v) {
      filling[r][c] = v;
      ++content[v - 1];
      rec(idx + 1);
      --content[v - 1];
    }
    filling[r][c] = 0;
  };
  rec(0);
  return total;
}

std::vector<Partition> pieri_e(const Partition& nu, int i, int cap_rows) {
  std::vector<Partition> out;
  if (i < 0) return out;
  Partition base = canonical(nu);
  const int rows = static_cast<int>(base.size()) + i;
  base.resize(rows, 0);
  Partition cur = base;
  std::function<void(int, int)> rec = [&](int r, int left) {
    if (r == rows) {
      if (left == 0) {
        Partition c = canonical(cur);
        if (static_cast<int>(c.size()) <= cap_rows) out.push_back(c);
      }
      return;
    }
    for (int add = 0; add <= std::min(1, left); ++add) {
      cur[r] = base[r] + add;
      if (r == 0 || cur[r] <= cur[r - 1]) rec(r + 1, left - add);
    }
    cur[r] = base[r];
  };
  rec(0, i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool cauchy_check(int n, const ring::SeriesTruncation& trunc) {
  using ring::MultiPoly;
  ring::PolyMatrix mat(n, std::vector<MultiPoly>(n));
  MultiPoly denominators(1L);
  MultiPoly rhs(1L);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      mat[i - 1][j - 1] = ring::series_geometric(ring::X(i) * ring::Z(j), trunc);
      denominators *= MultiPoly(1L) - ring::Z(i) * ring::X(j);
    }
    for (int j = i + 1; j <= n; ++j) rhs *= (ring::X(i) - ring::X(j)) * (ring::Z(i) - ring::Z(j));
  }
  const MultiPoly det = ring::truncate(ring::poly_det(mat), trunc);
  const MultiPoly lhs = ring::series_mul(det, denominators, trunc);
  return lhs == ring::truncate(rhs, trunc);
}

}  // namespace fermice::symfun
