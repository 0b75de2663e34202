// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <set>
#include <stdexcept>

#include "fermice/evolution/brackets.hpp"
#include "fermice/ice/bend.hpp"
#include "fermice/ice/ice.hpp"
#include "fermice/ring/divide.hpp"
#include "fermice/symfun/symfun.hpp"
#include "fermice/verify/suites.hpp"

namespace fermice::verify {

using evolution::Direction;
using ring::Monomial;
using ring::MultiPoly;
using ring::VarId;

namespace {

MultiPoly plus_prefactor(int n) {
  MultiPoly p(1L);
  for (int i = 1; i <= n; ++i) {
    const MultiPoly f = (ring::T(i) + 1L) * ring::X(i);
    p *= i % 2 == 0 ? f : -f;
  }
  return p;
}

MultiPoly minus_prefactor(int n, int lambda1) {
  MultiPoly p(1L);
  for (int i = 1; i <= n; ++i) p *= (ring::T(i) + 1L) * MultiPoly::var(VarId::x(i), -lambda1);
  return p;
}

MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q) {
  auto r = ring::exact_divide(p, q);
  if (!r) throw std::logic_error("bracket is not divisible by its prefactor");
  return *r;
}

MultiPoly schur_part(const StrictPartition& lambda) {
  return symfun::schur_jt(minus_rho(lambda), symfun::AlphabetPair::vars(static_cast<int>(lambda.size())));
}

std::string at(const StrictPartition& lambda) { return "lambda=" + format_parts(lambda); }

std::string pattern_text(const GTPattern& p) {
  std::string s;
  for (const auto& row : p.rows) s += (s.empty() ? "" : " / ") + format_parts(row);
  return s;
}

void sweep_side(SuiteReport& r, const StrictPartition& lambda, Direction side, int k,
                const Monomial& x, const MultiPoly& t) {
  const int n = static_cast<int>(lambda.size());
  const bool plus = side == Direction::plus;
  const int max_part = plus ? lambda[0] : k;
  const auto oracle = plus ? evolution::one_step_oracle_plus_all(lambda, x, t)
                           : evolution::one_step_oracle_minus_all(lambda, k, max_part, x, t);
  const auto candidates = strict_partitions(n - 1, max_part);
  const std::set<StrictPartition> candidate_set(candidates.begin(), candidates.end());
  const std::string prefix = at(lambda) + (plus ? " plus" : " minus k=" + std::to_string(k));
  for (const auto& [mu, value] : oracle) {
    r.check(candidate_set.count(mu) != 0, prefix + " mu=" + format_parts(mu), "mu among candidates",
            value.to_string());
  }
  for (const auto& mu : candidates) {
    const auto it = oracle.find(mu);
    const MultiPoly got = it == oracle.end() ? MultiPoly{} : it->second;
    const MultiPoly closed = plus ? evolution::one_step_closed_plus(mu, lambda, x, t)
                                  : evolution::one_step_closed_minus(mu, lambda, k, x, t);
    r.check_equal(closed, got, prefix + " mu=" + format_parts(mu));
  }
}

}  // namespace

MultiPoly z_delta_chain(const StrictPartition& lambda) {
  const int n = static_cast<int>(lambda.size());
  return divide_or_throw(evolution::chain_bracket(lambda, Direction::plus, evolution::default_vars(n)),
                         plus_prefactor(n));
}

MultiPoly z_delta_determinant(const StrictPartition& lambda) {
  const int n = static_cast<int>(lambda.size());
  MultiPoly p = schur_part(lambda);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) p *= ring::X(i) + ring::T(j) * ring::X(j);
  }
  return p;
}

MultiPoly z_gamma_chain(const StrictPartition& lambda) {
  const int n = static_cast<int>(lambda.size());
  return divide_or_throw(evolution::chain_bracket(lambda, Direction::minus, evolution::default_vars(n)),
                         minus_prefactor(n, lambda[0]));
}

MultiPoly z_gamma_determinant(const StrictPartition& lambda) {
  const int n = static_cast<int>(lambda.size());
  MultiPoly p = schur_part(lambda);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) p *= ring::X(i) + ring::T(i) * ring::X(j);
  }
  return p;
}

SuiteReport one_step_suite(int n_max, int lambda1_max) {
  return timed_suite("one_step", [&](SuiteReport& r) {
    const Monomial x = Monomial::var(VarId::x(1));
    const MultiPoly t = ring::T(1);
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& lambda : strict_partitions(n, lambda1_max)) {
        sweep_side(r, lambda, Direction::plus, 0, x, t);
        for (int k : {lambda[0] + 1, lambda[0] + 2}) sweep_side(r, lambda, Direction::minus, k, x, t);
      }
    }
  });
}

SuiteReport chain_suite(int n_max, int lambda1_max, int fock_n_max,
                           const std::vector<StrictPartition>& spots) {
  return timed_suite("chain", [&](SuiteReport& r) {
    auto one = [&](const StrictPartition& lambda, bool with_fock) {
      const auto vars = evolution::default_vars(static_cast<int>(lambda.size()));
      for (Direction side : {Direction::plus, Direction::minus}) {
        const std::string in = at(lambda) + (side == Direction::plus ? " plus" : " minus");
        const MultiPoly chain = evolution::chain_bracket(lambda, side, vars);
        r.check_equal(evolution::factorized_bracket(lambda, side, vars), chain, in + " chain vs factorized");
        if (with_fock) {
          r.check_equal(chain, evolution::chain_bracket_fock(lambda, side, vars), in + " chain vs operator product");
        }
      }
    };
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& lambda : strict_partitions(n, lambda1_max)) one(lambda, n <= fock_n_max);
    }
    for (const auto& lambda : spots) one(lambda, false);
  });
}

SuiteReport ice_suite(int n_max, int lambda1_max) {
  return timed_suite("ice", [&](SuiteReport& r) {
    for (int n = 1; n <= n_max; ++n) {
      const auto vars = evolution::default_vars(n);
      for (const auto& lambda : strict_partitions(n, lambda1_max)) {
        const auto states = ice::enumerate_states(lambda);
        const auto patterns = strict_gt_patterns(lambda);
        r.check(states.size() == patterns.size(), at(lambda) + " state count",
                std::to_string(patterns.size()), std::to_string(states.size()));
        for (const auto& s : states) {
          r.check(ice::is_admissible(s) && ice::row_identities_hold(s),
                  at(lambda) + " pattern=" + pattern_text(ice::ice_to_pattern(s)),
                  "row identities hold", "violated");
        }
        const MultiPoly zd = ice::partition_function(lambda, ice::WeightScheme::delta());
        r.check_equal(evolution::factorized_bracket(lambda, Direction::plus, vars), plus_prefactor(n) * zd,
                      at(lambda) + " global delta identity");
        const MultiPoly zg = ice::partition_function(lambda, ice::WeightScheme::gamma());
        r.check_equal(evolution::factorized_bracket(lambda, Direction::minus, vars),
                      minus_prefactor(n, lambda[0]) * zg, at(lambda) + " global gamma identity");
      }
    }
  });
}

SuiteReport calibration_suite(int n_max, int lambda1_max) {
  return timed_suite("calibration", [&](SuiteReport& r) {
    for (const auto& c : {ice::calibrate_delta(n_max, lambda1_max, false), ice::calibrate_gamma(n_max, lambda1_max)}) {
      const std::string in = c.scheme + " n<=" + std::to_string(n_max);
      r.check(c.matching_example > 0, in + " tables reproducing the row example", ">0",
              std::to_string(c.matching_example));
      r.check(c.consistent == 1, in + " consistent tables", "1", std::to_string(c.consistent));
      r.check(c.transcribed_consistent, in + " transcribed table", "consistent", "inconsistent");
      r.notes.push_back(c.scheme + ": " + std::to_string(c.permutations_tried) + " permutations, " +
                        std::to_string(c.distinct_tables) + " distinct tables, " +
                        std::to_string(c.matching_example) + " reproduce the example, " +
                        std::to_string(c.consistent) + " consistent");
    }
  });
}

SuiteReport bend_suite(const std::vector<StrictPartition>& lambdas) {
  return timed_suite("bend", [&](SuiteReport& r) {
    const MultiPoly t = ring::T(1);
    auto check_state = [&](const ice::BendIceState& s, const std::string& in) {
      r.check(ice::length_dichotomy_holds(s), in + " length relation", "holds", "violated");
      for (int i = 1; i <= s.pairs; ++i) {
        const auto b = ice::nn_row_brackets(s, i, t);
        r.check(b.scaled_weight == b.scaled_product, in + " pair " + std::to_string(i),
                b.scaled_weight.to_string(), b.scaled_product.to_string());
      }
    };
    for (const auto& lambda : lambdas) {
      const auto states = ice::enumerate_nn_states(lambda);
      r.check(!states.empty(), at(lambda) + " states", "nonempty", "none");
      for (std::size_t k = 0; k < states.size(); ++k) {
        check_state(states[k], at(lambda) + " state " + std::to_string(k));
      }
    }
    check_state(ice::example_bend_state(), "lambda=5,3,2 displayed state");
  });
}

BenchResult bench_family(int n, int k_max, int repetitions) {
  if (n < 1 || k_max < 0 || repetitions < 1) throw std::invalid_argument("bench: bad family parameters");
  BenchResult out;
  for (int k = 0; k <= k_max; ++k) {
    StrictPartition lambda;
    for (int i = n; i >= 1; --i) lambda.push_back(i);
    lambda[0] += k;
    MultiPoly values[3];
    const char* names[3] = {"enumerate", "chain", "determinant"};
    for (int m = 0; m < 3; ++m) {
      BenchRow row;
      row.lambda = lambda;
      row.method = names[m];
      const auto start = std::chrono::steady_clock::now();
      for (int rep = 0; rep < repetitions; ++rep) {
        if (m == 0) {
          const auto states = ice::enumerate_states(lambda);
          MultiPoly z;
          for (const auto& s : states) z += ice::state_weight(s, ice::WeightScheme::delta());
          values[m] = z;
          row.states = states.size();
        } else if (m == 1) {
          values[m] = z_delta_chain(lambda);
        } else {
          values[m] = z_delta_determinant(lambda);
        }
      }
      row.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repetitions;
      row.terms = values[m].size();
      out.rows.push_back(row);
    }
    for (int m = 1; m < 3; ++m) {
      if (values[m] != values[0]) {
        out.agree = false;
        out.disagreements.push_back(at(lambda) + " " + names[m] + " = " + values[m].to_string() +
                                    ", enumerate = " + values[0].to_string());
      }
    }
  }
  return out;
}

}  // namespace fermice::verify
