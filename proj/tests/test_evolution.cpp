// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fermice/evolution/brackets.hpp"
#include "fermice/fock/operators.hpp"
#include "fermice/ring/io.hpp"

using namespace fermice;
using namespace fermice::evolution;
using ring::Monomial;
using ring::MultiPoly;
using ring::VarId;

namespace {

MultiPoly P(const char* s) { return ring::parse_poly(s); }
const Monomial kX = Monomial::var(VarId::x(1));
const MultiPoly kT = ring::T(1);

}  // namespace

TEST_CASE("s coefficients") {
  CHECK(s_coeff(1, EvolutionSpec::plus(kX, kT)) == P("(1+t1)*x1"));
  CHECK(s_coeff(2, EvolutionSpec::plus(kX, kT)) == P("(1-t1^2)/2*x1^2"));
  CHECK(s_coeff(3, EvolutionSpec::minus(kX, kT)) == P("(1+t1^3)/3*x1^-3"));
  CHECK_THROWS_AS(s_coeff(0, EvolutionSpec::plus(kX, kT)), std::invalid_argument);
}

TEST_CASE("evolution of the golden example") {
  const fock::FockVector v =
      fock::apply_annihilate(0, fock::FockVector(fock::state_from_strict({5, 3, 2})));
  const auto spec = EvolutionSpec::plus(Monomial::var(VarId::x(3)), ring::T(3));
  const auto w = apply_exp_phi(v, spec, 3);
  CHECK(fock::inner(fock::state_from_strict({4, 3}), w) == P("-x3^3*(1+t3)^2"));
  // A larger budget does not change the coefficient.
  CHECK(fock::inner(fock::state_from_strict({4, 3}), apply_exp_phi(v, spec, 6)) ==
        P("-x3^3*(1+t3)^2"));
  CHECK(apply_exp_phi(fock::FockVector(fock::vacuum(-1)), spec, 5) ==
        fock::FockVector(fock::vacuum(-1)));
  const auto one =
      fock::apply_annihilate(0, fock::FockVector(fock::state_from_strict({1})));
  CHECK(fock::inner(fock::vacuum(0), apply_exp_phi(one, EvolutionSpec::plus(kX, kT), 1)) ==
        P("-(1+t1)*x1"));
}

TEST_CASE("interleaving statistics") {
  CHECK(interleave_statistics({5, 3, 2}, {4, 3}) == StepStatistics{0, 1, 1, true});
  CHECK(interleave_statistics({2, 1}, {1}) == StepStatistics{1, 0, 1, true});
  CHECK_FALSE(interleave_statistics({2, 1}, {3}).interleaves);
  CHECK_THROWS_AS(interleave_statistics({2, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(interleave_statistics({3, 2}, {2, 1}), std::invalid_argument);
}

TEST_CASE("one-step brackets") {
  CHECK(one_step_oracle_plus({4, 3}, {5, 3, 2}, kX, kT) == P("-x1^3*(1+t1)^2"));
  CHECK(one_step_closed_plus({4, 3}, {5, 3, 2}, kX, kT) == P("-x1^3*(1+t1)^2"));
  CHECK(one_step_oracle_plus({4}, {3, 1}, kX, kT).is_zero());
  CHECK(one_step_oracle_plus({1}, {2, 1}, kX, kT) == P("t1*(1+t1)*x1^2"));
  CHECK(one_step_closed_plus({1}, {2, 1}, kX, kT) == P("t1*(1+t1)*x1^2"));
  CHECK(one_step_closed_plus({}, {1}, kX, kT) == P("-(1+t1)*x1"));
  CHECK(one_step_closed_plus({2}, {2, 1}, kX, kT) == P("(1+t1)*x1"));
  CHECK(one_step_oracle_plus({2}, {2, 1}, kX, kT) == P("(1+t1)*x1"));

  CHECK(one_step_oracle_minus({4, 3}, {5, 3, 2}, 6, kX, kT) == P("t1*(1+t1)^2*x1^-3"));
  CHECK(one_step_closed_minus({4, 3}, {5, 3, 2}, 6, kX, kT) == P("t1*(1+t1)^2*x1^-3"));
  CHECK(one_step_oracle_minus({}, {1}, 2, kX, kT) == P("(1+t1)*x1^-1"));
  CHECK(one_step_oracle_minus({4}, {3, 1}, 5, kX, kT).is_zero());
  CHECK_THROWS_AS(one_step_oracle_minus({1}, {2, 1}, 2, kX, kT), std::invalid_argument);
}

TEST_CASE("batch oracles agree with single-pair oracles") {
  for (const auto& lambda : strict_partitions(3, 5)) {
    const auto plus = one_step_oracle_plus_all(lambda, kX, kT);
    const auto minus = one_step_oracle_minus_all(lambda, lambda[0] + 1, lambda[0], kX, kT);
    for (const auto& mu : strict_partitions(2, lambda[0])) {
      auto p = plus.find(mu);
      CHECK((p == plus.end() ? MultiPoly{} : p->second) ==
            one_step_oracle_plus(mu, lambda, kX, kT));
      auto m = minus.find(mu);
      CHECK((m == minus.end() ? MultiPoly{} : m->second) ==
            one_step_oracle_minus(mu, lambda, lambda[0] + 1, kX, kT));
    }
  }
}

TEST_CASE("one-step brackets on small shapes") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : strict_partitions(n, 5)) {
      const auto plus = one_step_oracle_plus_all(lambda, kX, kT);
      for (int dk = 1; dk <= 2; ++dk) {
        const int k = lambda[0] + dk;
        const auto minus = one_step_oracle_minus_all(lambda, k, lambda[0], kX, kT);
        for (const auto& mu : strict_partitions(n - 1, lambda[0])) {
          auto m = minus.find(mu);
          CHECK((m == minus.end() ? MultiPoly{} : m->second) ==
                one_step_closed_minus(mu, lambda, k, kX, kT));
        }
      }
      for (const auto& mu : strict_partitions(n - 1, lambda[0])) {
        auto p = plus.find(mu);
        CHECK((p == plus.end() ? MultiPoly{} : p->second) ==
              one_step_closed_plus(mu, lambda, kX, kT));
      }
      // Every nonzero plus bracket has an interleaving μ.
      for (const auto& [mu, v] : plus) CHECK(interleave_statistics(lambda, mu).interleaves);
    }
  }
}

TEST_CASE("chains") {
  const auto v2 = default_vars(2);
  CHECK(chain_bracket({1}, Direction::plus, default_vars(1)) == P("-(1+t1)*x1"));
  CHECK(chain_bracket({2, 1}, Direction::plus, v2) == P("-x1*x2*(1+t1)*(1+t2)*(x1+t2*x2)"));
  CHECK(chain_bracket({2, 1}, Direction::minus, v2) ==
        P("x1^-2*x2^-2*(1+t1)*(1+t2)*(x1+t1*x2)"));
  CHECK(factorized_bracket({3, 1}, Direction::plus, v2) ==
        P("-x1*x2*(1+t1)*(1+t2)*(x1+t2*x2)*(x1+x2)"));
  CHECK(chain_bracket({3, 1}, Direction::plus, v2) ==
        factorized_bracket({3, 1}, Direction::plus, v2));
  for (int n = 1; n <= 3; ++n) {
    const auto vars = default_vars(n);
    for (const auto& lambda : strict_partitions(n, 4)) {
      for (auto side : {Direction::plus, Direction::minus}) {
        const MultiPoly f = factorized_bracket(lambda, side, vars);
        CHECK(chain_bracket(lambda, side, vars) == f);
        CHECK(chain_bracket_fock(lambda, side, vars) == f);
      }
    }
  }
}

TEST_CASE("after n plus steps only single-particle states over |-1> survive") {
  const StrictPartition lambda{4, 2, 1};
  fock::FockVector v(fock::state_from_strict(lambda));
  const auto vars = default_vars(3);
  for (int i = 3; i >= 1; --i) {
    v = fock::apply_annihilate(0, v);
    v = evolve(v, EvolutionSpec::plus(vars[i - 1].x, vars[i - 1].t), 0);
  }
  CHECK_FALSE(v.is_zero());
  for (const auto& [s, c] : v.terms()) {
    (void)c;
    bool single = false;
    for (int m = 0; m <= lambda[0]; ++m) {
      if (s == *fock::vacuum(-1).added(m)) single = true;
    }
    CHECK(single);
  }
}
