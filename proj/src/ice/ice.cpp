// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ice/ice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fermice/evolution/brackets.hpp"
#include "fermice/ring/io.hpp"

namespace fermice::ice {

using ring::Monomial;
using ring::MultiPoly;
using ring::VarId;

namespace {

using TF = WeightTemplate::TFactor;

constexpr std::array<WeightTemplate, 6> kDeltaColumns{{
    {0, TF::one}, {1, TF::t}, {0, TF::one}, {1, TF::one}, {1, TF::t_plus_one}, {0, TF::one}}};
constexpr std::array<WeightTemplate, 6> kGammaColumns{{
    {0, TF::one}, {1, TF::one}, {0, TF::t}, {1, TF::one}, {1, TF::t_plus_one}, {0, TF::one}}};

bool in_parts(const StrictPartition& p, int c) { return std::find(p.begin(), p.end(), c) != p.end(); }

using RowHistogram = std::array<int, 7>;

RowHistogram row_histogram(const IceState& s, int r) {
  RowHistogram h{};
  for (int c = 0; c < s.cols; ++c) {
    auto t = vertex_type_at(s, r, c);
    if (!t) throw std::logic_error("row_histogram: inadmissible vertex");
    ++h[static_cast<std::size_t>(*t)];
  }
  return h;
}

MultiPoly weigh(const std::array<WeightTemplate, 6>& table, const RowHistogram& h,
                const Monomial& x, const MultiPoly& t) {
  MultiPoly w(1L);
  for (std::size_t type = 1; type <= 6; ++type) {
    if (h[type] > 0) w *= table[type - 1].evaluate(x, t).pow(static_cast<unsigned>(h[type]));
  }
  return w;
}

// Three-row state with rows (5,3,2), (4,3), (3).
IceState example_state() { return pattern_to_ice(GTPattern{{{5, 3, 2}, {4, 3}, {3}}}); }

// Per-state row histograms, top row first.
struct Sample {
  GTPattern pattern;
  std::vector<RowHistogram> rows;
};

std::vector<std::vector<Sample>> samples_by_lambda(int n_max, int lambda1_max,
                                                   std::vector<StrictPartition>& lambdas) {
  std::vector<std::vector<Sample>> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& lambda : strict_partitions(n, lambda1_max)) {
      lambdas.push_back(lambda);
      std::vector<Sample> group;
      for (const auto& p : strict_gt_patterns(lambda)) {
        const IceState s = pattern_to_ice(p);
        Sample sm{p, {}};
        for (int r = 0; r < s.rows; ++r) sm.rows.push_back(row_histogram(s, r));
        group.push_back(std::move(sm));
      }
      out.push_back(std::move(group));
    }
  }
  return out;
}

std::set<std::array<WeightTemplate, 6>> distinct_tables(const std::array<WeightTemplate, 6>& cols,
                                                         int& tried) {
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  std::set<std::array<WeightTemplate, 6>> tables;
  tried = 0;
  do {
    std::array<WeightTemplate, 6> t;
    for (std::size_t i = 0; i < 6; ++i) t[i] = cols[static_cast<std::size_t>(perm[i])];
    tables.insert(t);
    ++tried;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

MultiPoly plus_prefactor(int i) {
  MultiPoly f = (ring::T(i) + 1L) * ring::X(i);
  return i % 2 == 0 ? f : -f;
}

MultiPoly minus_prefactor(int k, int lambda1) {
  return (ring::T(k) + 1L).shifted(Monomial::var(VarId::x(k), -lambda1));
}

}  // namespace

std::optional<int> vertex_type(bool w, bool e, bool n, bool s) {
  if (w && e && !n && !s) return 1;
  if (!w && !e && n && s) return 2;
  if (w && e && n && s) return 3;
  if (!w && !e && !n && !s) return 4;
  if (!w && e && !n && s) return 5;
  if (w && !e && n && !s) return 6;
  return std::nullopt;
}

std::optional<int> vertex_type_at(const IceState& s, int r, int c) {
  const auto ur = static_cast<std::size_t>(r);
  const auto uc = static_cast<std::size_t>(c);
  return vertex_type(s.horizontal[ur][uc] != 0, s.horizontal[ur][uc + 1] != 0,
                     s.vertical[ur][uc] != 0, s.vertical[ur + 1][uc] != 0);
}

bool is_admissible(const IceState& s) {
  if (!is_strict(s.lambda) || s.rows != static_cast<int>(s.lambda.size())) return false;
  if (s.cols != (s.lambda.empty() ? 0 : s.lambda[0])) return false;
  if (s.vertical.size() != static_cast<std::size_t>(s.rows + 1) ||
      s.horizontal.size() != static_cast<std::size_t>(s.rows)) {
    return false;
  }
  for (const auto& row : s.vertical) {
    if (row.size() != static_cast<std::size_t>(s.cols)) return false;
  }
  for (const auto& row : s.horizontal) {
    if (row.size() != static_cast<std::size_t>(s.cols + 1)) return false;
    if (row.front() != 1 || row.back() != 0) return false;
  }
  for (int c = 0; c < s.cols; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    if ((s.vertical.front()[uc] != 0) != in_parts(s.lambda, s.cols - c)) return false;
    if (s.vertical.back()[uc] != 0) return false;
  }
  for (int r = 0; r < s.rows; ++r) {
    for (int c = 0; c < s.cols; ++c) {
      if (!vertex_type_at(s, r, c)) return false;
    }
  }
  return true;
}

IceState pattern_to_ice(const GTPattern& p) {
  if (!p.valid()) throw std::invalid_argument("pattern_to_ice: not a strict GT pattern");
  const int n = p.n();
  IceState s;
  s.lambda = p.level(n);
  s.rows = n;
  s.cols = n == 0 ? 0 : s.lambda[0];
  const auto ucols = static_cast<std::size_t>(s.cols);
  s.vertical.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint8_t>(ucols, 0));
  s.horizontal.assign(static_cast<std::size_t>(n), std::vector<std::uint8_t>(ucols + 1, 0));
  for (int r = 0; r <= n; ++r) {
    const auto& level = p.level(n - r);
    for (int c = 0; c < s.cols; ++c) {
      s.vertical[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          in_parts(level, s.cols - c) ? 1 : 0;
    }
  }
  for (int r = 0; r < n; ++r) {
    auto& h = s.horizontal[static_cast<std::size_t>(r)];
    int cur = 1;
    h[0] = 1;
    for (int c = 0; c < s.cols; ++c) {
      const auto uc = static_cast<std::size_t>(c);
      cur += s.vertical[static_cast<std::size_t>(r) + 1][uc] - s.vertical[static_cast<std::size_t>(r)][uc];
      if (cur < 0 || cur > 1) throw std::logic_error("pattern_to_ice: inadmissible fill");
      h[uc + 1] = static_cast<std::uint8_t>(cur);
    }
  }
  if (!is_admissible(s)) throw std::logic_error("pattern_to_ice: inadmissible fill");
  return s;
}

GTPattern ice_to_pattern(const IceState& s) {
  if (!is_admissible(s)) throw std::invalid_argument("ice_to_pattern: state is not admissible");
  GTPattern p;
  for (int r = 0; r < s.rows; ++r) {
    StrictPartition level;
    for (int c = 0; c < s.cols; ++c) {
      if (s.vertical[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        level.push_back(s.cols - c);
      }
    }
    p.rows.push_back(std::move(level));
  }
  if (!p.valid()) throw std::invalid_argument("ice_to_pattern: rows do not interleave");
  return p;
}

std::vector<IceState> enumerate_states(const StrictPartition& lambda) {
  std::vector<IceState> out;
  for (const auto& p : strict_gt_patterns(lambda)) out.push_back(pattern_to_ice(p));
  return out;
}

std::array<int, 7> type_histogram(const IceState& s) {
  std::array<int, 7> h{};
  for (int r = 0; r < s.rows; ++r) {
    const auto row = row_histogram(s, r);
    for (std::size_t k = 1; k <= 6; ++k) h[k] += row[k];
  }
  return h;
}

MultiPoly WeightTemplate::evaluate(const Monomial& x, const MultiPoly& t) const {
  MultiPoly base;
  switch (t_factor) {
    case TFactor::one:
      base = MultiPoly(1L);
      break;
    case TFactor::t:
      base = t;
      break;
    case TFactor::t_plus_one:
      base = t + 1L;
      break;
  }
  return base.shifted(x.pow(x_power));
}

std::string WeightTemplate::to_string(const std::string& x, const std::string& t) const {
  std::string xs;
  if (x_power == 1) xs = x;
  if (x_power != 0 && x_power != 1) xs = x + "^" + std::to_string(x_power);
  std::string ts;
  if (t_factor == TFactor::t) ts = t;
  if (t_factor == TFactor::t_plus_one) ts = "(" + t + "+1)";
  if (xs.empty() && ts.empty()) return "1";
  if (xs.empty()) return ts;
  if (ts.empty()) return xs;
  return t_factor == TFactor::t ? ts + xs : xs + ts;
}

WeightScheme WeightScheme::delta() { return {"delta", kDeltaColumns, RowIndex::direct}; }

WeightScheme WeightScheme::gamma() { return {"gamma", kGammaColumns, RowIndex::reversed}; }

WeightScheme WeightScheme::ones() {
  WeightScheme s{"ones", {}, RowIndex::direct};
  s.table.fill(WeightTemplate{});
  return s;
}

WeightScheme WeightScheme::by_name(const std::string& name) {
  if (name == "delta") return delta();
  if (name == "gamma") return gamma();
  if (name == "ones") return ones();
  throw std::invalid_argument("unknown weight scheme '" + name + "' (expected delta, gamma, ones)");
}

int WeightScheme::spectral_index(int row_label, int n) const {
  return row_index == RowIndex::direct ? row_label : n - row_label + 1;
}

MultiPoly row_weight(const IceState& s, int i, const WeightScheme& scheme, const Monomial& x,
                     const MultiPoly& t) {
  if (i < 1 || i > s.rows) throw std::invalid_argument("row_weight: row label out of range");
  return weigh(scheme.table, row_histogram(s, s.rows - i), x, t);
}

MultiPoly row_weight(const IceState& s, int i, const WeightScheme& scheme) {
  const int k = scheme.spectral_index(i, s.rows);
  return row_weight(s, i, scheme, Monomial::var(VarId::x(k)), ring::T(k));
}

MultiPoly state_weight(const IceState& s, const WeightScheme& scheme) {
  MultiPoly w(1L);
  for (int i = s.rows; i >= 1; --i) w *= row_weight(s, i, scheme);
  return w;
}

MultiPoly partition_function(const StrictPartition& lambda, const WeightScheme& scheme) {
  MultiPoly z;
  for (const auto& s : enumerate_states(lambda)) z += state_weight(s, scheme);
  return z;
}

bool row_identities_hold(const IceState& s) {
  const GTPattern p = ice_to_pattern(s);
  const int n = s.rows;
  const int lambda1 = s.cols;
  for (int i = 1; i <= n; ++i) {
    const Monomial xi = Monomial::var(VarId::x(i));
    const MultiPoly lhs = plus_prefactor(i) * row_weight(s, i, WeightScheme::delta());
    if (lhs != evolution::one_step_closed_plus(p.level(i - 1), p.level(i), xi, ring::T(i))) {
      return false;
    }
    const int k = n - i + 1;
    const MultiPoly lhs_g = minus_prefactor(k, lambda1) * row_weight(s, i, WeightScheme::gamma());
    if (lhs_g != evolution::one_step_closed_minus(p.level(i - 1), p.level(i), lambda1 + 1,
                                                  Monomial::var(VarId::x(k)), ring::T(k))) {
      return false;
    }
  }
  return true;
}

CalibrationResult calibrate_delta(int n_max, int lambda1_max, bool row_identity) {
  CalibrationResult res;
  res.scheme = "delta";
  const auto tables = distinct_tables(kDeltaColumns, res.permutations_tried);
  res.distinct_tables = static_cast<int>(tables.size());

  const auto example = row_histogram(example_state(), 0);
  const MultiPoly example_value = ring::parse_poly("x3^2*(t3+1)");
  std::vector<StrictPartition> lambdas;
  const auto samples = samples_by_lambda(n_max, lambda1_max, lambdas);

  for (const auto& table : tables) {
    if (weigh(table, example, Monomial::var(VarId::x(3)), ring::T(3)) != example_value) continue;
    ++res.matching_example;
    bool ok = true;
    for (std::size_t g = 0; g < samples.size() && ok; ++g) {
      const auto& lambda = lambdas[g];
      const int n = static_cast<int>(lambda.size());
      MultiPoly z;
      for (const auto& sm : samples[g]) {
        MultiPoly w(1L);
        for (int i = 1; i <= n; ++i) {
          const MultiPoly rw = weigh(table, sm.rows[static_cast<std::size_t>(n - i)],
                                     Monomial::var(VarId::x(i)), ring::T(i));
          if (row_identity &&
              plus_prefactor(i) * rw !=
                  evolution::one_step_closed_plus(sm.pattern.level(i - 1), sm.pattern.level(i),
                                                  Monomial::var(VarId::x(i)), ring::T(i))) {
            ok = false;
          }
          w *= rw;
        }
        z += w;
      }
      MultiPoly pref(1L);
      for (int i = 1; i <= n; ++i) pref *= plus_prefactor(i);
      if (pref * z != evolution::factorized_bracket(lambda, evolution::Direction::plus,
                                                    evolution::default_vars(n))) {
        ok = false;
      }
    }
    if (!ok) continue;
    ++res.consistent;
    res.consistent_tables.push_back(table);
    if (table == kDeltaColumns) res.transcribed_consistent = true;
  }
  return res;
}

CalibrationResult calibrate_gamma(int n_max, int lambda1_max) {
  CalibrationResult res;
  res.scheme = "gamma";
  const auto tables = distinct_tables(kGammaColumns, res.permutations_tried);
  res.distinct_tables = static_cast<int>(tables.size());

  const auto example = row_histogram(example_state(), 0);
  const MultiPoly example_value = ring::parse_poly("x1^2*(t1+1)*t1");
  std::vector<StrictPartition> lambdas;
  const auto samples = samples_by_lambda(n_max, lambda1_max, lambdas);

  for (const auto& table : tables) {
    if (weigh(table, example, Monomial::var(VarId::x(1)), ring::T(1)) != example_value) continue;
    ++res.matching_example;
    bool ok = true;
    for (std::size_t g = 0; g < samples.size() && ok; ++g) {
      const auto& lambda = lambdas[g];
      const int n = static_cast<int>(lambda.size());
      for (const auto& sm : samples[g]) {
        for (int i = 1; i <= n && ok; ++i) {
          const int k = n - i + 1;
          const Monomial xk = Monomial::var(VarId::x(k));
          const MultiPoly rw = weigh(table, sm.rows[static_cast<std::size_t>(n - i)], xk, ring::T(k));
          ok = minus_prefactor(k, lambda[0]) * rw ==
               evolution::one_step_closed_minus(sm.pattern.level(i - 1), sm.pattern.level(i),
                                                lambda[0] + 1, xk, ring::T(k));
        }
      }
    }
    if (!ok) continue;
    ++res.consistent;
    res.consistent_tables.push_back(table);
    if (table == kGammaColumns) res.transcribed_consistent = true;
  }
  return res;
}

}  // namespace fermice::ice
