// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ice/bend.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermice/evolution/hamiltonian.hpp"
#include "fermice/fock/operators.hpp"

namespace fermice::ice {

using ring::Monomial;
using ring::MultiPoly;
using ring::VarId;

namespace {

std::vector<std::uint8_t> level_bits(const StrictPartition& level, int cols) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(cols), 0);
  for (int part : level) {
    if (part < 1 || part > cols) throw std::invalid_argument("bend state: part outside the columns");
    bits[static_cast<std::size_t>(cols - part)] = 1;
  }
  return bits;
}

StrictPartition bits_level(const std::vector<std::uint8_t>& bits) {
  const int cols = static_cast<int>(bits.size());
  StrictPartition level;
  for (int c = 0; c < cols; ++c) {
    if (bits[static_cast<std::size_t>(c)] != 0) level.push_back(cols - c);
  }
  return level;
}

// Horizontal edges of a row from its northern and southern edges, starting
// from an inward left boundary. Empty when the fill leaves {0, 1}.
std::vector<std::uint8_t> fill_row(const std::vector<std::uint8_t>& north,
                                   const std::vector<std::uint8_t>& south) {
  std::vector<std::uint8_t> h(north.size() + 1, 0);
  int cur = 1;
  h[0] = 1;
  for (std::size_t c = 0; c < north.size(); ++c) {
    cur += south[c] - north[c];
    if (cur < 0 || cur > 1) return {};
    h[c + 1] = static_cast<std::uint8_t>(cur);
  }
  return h;
}

int row_of(int pairs, int i, bool barred) { return 2 * (pairs - i) + (barred ? 1 : 0); }

const WeightScheme& delta_scheme() {
  static const WeightScheme s = WeightScheme::delta();
  return s;
}

const WeightScheme& gamma_scheme() {
  static const WeightScheme s = WeightScheme::gamma();
  return s;
}

// Weight of one stored row under a scheme's table with explicit parameters.
MultiPoly table_row_weight(const BendIceState& s, int r, const WeightScheme& scheme,
                           const Monomial& x, const MultiPoly& t) {
  MultiPoly w(1L);
  const auto ur = static_cast<std::size_t>(r);
  for (int c = 0; c < s.cols; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    auto type = vertex_type(s.horizontal[ur][uc] != 0, s.horizontal[ur][uc + 1] != 0,
                            s.vertical[ur][uc] != 0, s.vertical[ur + 1][uc] != 0);
    if (!type) throw std::logic_error("bend state: inadmissible vertex");
    w *= scheme.table[static_cast<std::size_t>(*type - 1)].evaluate(x, t);
  }
  return w;
}

void require_pair(const BendIceState& s, int i) {
  if (i < 1 || i > s.pairs) throw std::invalid_argument("row pair index out of range");
}

}  // namespace

bool is_admissible(const BendIceState& s) {
  const int n = s.pairs;
  if (!is_strict(s.lambda) || n != static_cast<int>(s.lambda.size())) return false;
  if (s.cols != (n == 0 ? 0 : s.lambda[0])) return false;
  if (s.vertical.size() != static_cast<std::size_t>(2 * n + 1) ||
      s.horizontal.size() != static_cast<std::size_t>(2 * n) ||
      s.bend_up.size() != static_cast<std::size_t>(n)) {
    return false;
  }
  for (const auto& row : s.vertical) {
    if (row.size() != static_cast<std::size_t>(s.cols)) return false;
  }
  for (const auto& row : s.horizontal) {
    if (row.size() != static_cast<std::size_t>(s.cols + 1) || row.front() != 1) return false;
  }
  if (s.vertical.front() != level_bits(s.lambda, s.cols)) return false;
  for (auto b : s.vertical.back()) {
    if (b != 0) return false;
  }
  for (int r = 0; r < 2 * n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    for (int c = 0; c < s.cols; ++c) {
      const auto uc = static_cast<std::size_t>(c);
      if (!vertex_type(s.horizontal[ur][uc] != 0, s.horizontal[ur][uc + 1] != 0,
                       s.vertical[ur][uc] != 0, s.vertical[ur + 1][uc] != 0)) {
        return false;
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    const auto upper = s.horizontal[static_cast<std::size_t>(2 * p)].back();
    const auto lower = s.horizontal[static_cast<std::size_t>(2 * p + 1)].back();
    // One end feeds the bend and the other drains it.
    if (upper == lower) return false;
    if ((s.bend_up[static_cast<std::size_t>(p)] != 0) != (upper == 0)) return false;
  }
  return true;
}

BendIceState levels_to_bend_state(const StrictPartition& lambda, const BendLevels& levels) {
  if (!is_strict(lambda)) throw std::invalid_argument("bend state: lambda must be strict");
  BendIceState s;
  s.lambda = lambda;
  s.pairs = static_cast<int>(lambda.size());
  s.cols = lambda.empty() ? 0 : lambda[0];
  if (levels.size() != static_cast<std::size_t>(2 * s.pairs) || (s.pairs > 0 && levels[0] != lambda)) {
    throw std::invalid_argument("bend state: expected 2n levels starting with lambda");
  }
  for (const auto& level : levels) {
    if (!level.empty() && !is_strict(level)) throw std::invalid_argument("bend state: level not strict");
    s.vertical.push_back(level_bits(level, s.cols));
  }
  s.vertical.push_back(std::vector<std::uint8_t>(static_cast<std::size_t>(s.cols), 0));
  for (int r = 0; r < 2 * s.pairs; ++r) {
    auto h = fill_row(s.vertical[static_cast<std::size_t>(r)], s.vertical[static_cast<std::size_t>(r) + 1]);
    if (h.empty()) throw std::invalid_argument("bend state: levels do not interleave");
    s.horizontal.push_back(std::move(h));
  }
  for (int p = 0; p < s.pairs; ++p) {
    s.bend_up.push_back(s.horizontal[static_cast<std::size_t>(2 * p)].back() == 0 ? 1 : 0);
  }
  if (!is_admissible(s)) throw std::invalid_argument("bend state: bend orientation mismatch");
  return s;
}

BendLevels bend_levels(const BendIceState& s) {
  if (!is_admissible(s)) throw std::invalid_argument("bend state is not admissible");
  BendLevels levels;
  for (int r = 0; r < 2 * s.pairs; ++r) levels.push_back(bits_level(s.vertical[static_cast<std::size_t>(r)]));
  return levels;
}

std::vector<BendIceState> enumerate_nn_states(const StrictPartition& lambda) {
  if (!is_strict(lambda)) throw std::invalid_argument("enumerate_nn_states: lambda must be strict");
  const int n = static_cast<int>(lambda.size());
  const int cols = n == 0 ? 0 : lambda[0];
  std::vector<BendIceState> out;
  if (n == 0) {
    out.push_back(levels_to_bend_state(lambda, {}));
    return out;
  }
  // Southern edges reachable from a row's northern edges, with the row's
  // right-end orientation.
  auto children = [cols](const std::vector<std::uint8_t>& north) {
    std::vector<std::pair<std::vector<std::uint8_t>, std::uint8_t>> kids;
    std::vector<std::uint8_t> south(static_cast<std::size_t>(cols), 0);
    auto rec = [&](auto&& self, int c, int cur) -> void {
      if (c == cols) {
        kids.emplace_back(south, static_cast<std::uint8_t>(cur));
        return;
      }
      const auto uc = static_cast<std::size_t>(c);
      for (std::uint8_t b : {std::uint8_t{1}, std::uint8_t{0}}) {
        const int next = cur - north[uc] + b;
        if (next < 0 || next > 1) continue;
        south[uc] = b;
        self(self, c + 1, next);
      }
      south[uc] = 0;
    };
    rec(rec, 0, 1);
    return kids;
  };

  BendLevels levels{lambda};
  std::vector<std::vector<std::uint8_t>> stack{level_bits(lambda, cols)};
  std::vector<std::uint8_t> ends;
  auto walk = [&](auto&& self, int r) -> void {
    if (r == 2 * n) {
      for (auto b : stack.back()) {
        if (b != 0) return;
      }
      BendLevels lv(levels.begin(), levels.end() - 1);
      out.push_back(levels_to_bend_state(lambda, lv));
      return;
    }
    for (auto& [south, end] : children(stack.back())) {
      if (r % 2 == 1 && end == ends.back()) continue;
      stack.push_back(south);
      levels.push_back(bits_level(south));
      ends.push_back(end);
      self(self, r + 1);
      ends.pop_back();
      levels.pop_back();
      stack.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), [](const BendIceState& a, const BendIceState& b) {
    return bend_levels(a) < bend_levels(b);
  });
  return out;
}

bool length_dichotomy_holds(const BendIceState& s) {
  const BendLevels lv = bend_levels(s);
  for (int i = s.pairs; i >= 1; --i) {
    const auto li = lv[static_cast<std::size_t>(row_of(s.pairs, i, false))].size();
    const auto lbar = lv[static_cast<std::size_t>(row_of(s.pairs, i, true))].size();
    const std::size_t lprev =
        i == 1 ? 0 : lv[static_cast<std::size_t>(row_of(s.pairs, i - 1, false))].size();
    const bool same = li == lbar && lbar == lprev + 1;
    const bool drop = li == lbar + 1 && li == lprev + 1;
    if (!same && !drop) return false;
  }
  return true;
}

MultiPoly nn_row_weight(const BendIceState& s, int i, const MultiPoly& t) {
  require_pair(s, i);
  const Monomial x = Monomial::var(VarId::x(i));
  const Monomial xinv = x.inverse();
  MultiPoly w = table_row_weight(s, row_of(s.pairs, i, false), delta_scheme(), x, t) *
                table_row_weight(s, row_of(s.pairs, i, true), gamma_scheme(), xinv, t);
  if (s.bend_up[static_cast<std::size_t>(s.pairs - i)] != 0) {
    w *= t.shifted(x);
  } else {
    w = w.shifted(xinv);
  }
  return w;
}

MultiPoly nn_state_weight(const BendIceState& s, const MultiPoly& t) {
  MultiPoly w(1L);
  for (int i = s.pairs; i >= 1; --i) w *= nn_row_weight(s, i, t);
  return w;
}

RowPairBrackets nn_row_brackets(const BendIceState& s, int i, const MultiPoly& t) {
  require_pair(s, i);
  const BendLevels lv = bend_levels(s);
  const StrictPartition& top = lv[static_cast<std::size_t>(row_of(s.pairs, i, false))];
  const StrictPartition& mid = lv[static_cast<std::size_t>(row_of(s.pairs, i, true))];
  const StrictPartition prev =
      i == 1 ? StrictPartition{} : lv[static_cast<std::size_t>(row_of(s.pairs, i - 1, false))];
  const Monomial x = Monomial::var(VarId::x(i));
  const int k = s.lambda[0] + 1;

  using fock::FockVector;
  const fock::FockState top_state = fock::state_from_strict(top);
  const fock::FockState mid_state = fock::state_from_strict(mid);
  const fock::FockState prev_state = fock::state_from_strict(prev);

  RowPairBrackets out;
  const auto plus = evolution::EvolutionSpec::plus(x, t);
  const int mid_energy = mid_state.energy();
  out.a2 = fock::inner(mid_state, evolution::evolve(FockVector(top_state), plus, mid_energy));
  out.a1 = fock::inner(mid_state, evolution::evolve(fock::apply_annihilate(0, FockVector(top_state)),
                                                    plus, mid_energy));

  // States that survive ψ_{k-1/2} (and ψ*_{-1/2}) onto ⟨λ^{(i-1)}|.
  int bound = prev_state.added(k)->energy();
  if (auto hole = prev_state.removed(0)) bound = std::max(bound, hole->added(k)->energy());
  const FockVector evolved = evolution::evolve(
      FockVector(mid_state), evolution::EvolutionSpec::minus(x.inverse(), t), bound, k);
  const FockVector cut = fock::apply_annihilate(k, evolved);
  out.b2 = fock::inner(prev_state, cut);
  out.b1 = fock::inner(prev_state, fock::apply_create(0, cut));

  const MultiPoly tp1 = t + 1L;
  const MultiPoly alpha = (i % 2 == 0 ? t : -t) * out.a1 + tp1.shifted(x.inverse()) * out.a2;
  const MultiPoly beta = (i % 2 == 1 ? out.b1 : -out.b1).shifted(x.pow(-(k))) +
                         out.b2.shifted(x.pow(-(k - 1)));
  out.scaled_product = beta * alpha;
  out.scaled_weight = tp1 * tp1 * nn_row_weight(s, i, t);
  return out;
}

bool nn_row_factorization_check(const BendIceState& s, int i, const MultiPoly& t) {
  const RowPairBrackets b = nn_row_brackets(s, i, t);
  return b.scaled_weight == b.scaled_product;
}

BendIceState example_bend_state() {
  return levels_to_bend_state({5, 3, 2}, {{5, 3, 2}, {4, 2}, {4, 1}, {3, 1}, {2}, {}});
}

}  // namespace fermice::ice
