// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fermice/evolution/brackets.hpp"
#include "fermice/ice/bend.hpp"
#include "fermice/ice/io.hpp"
#include "fermice/ring/io.hpp"
#include "oracles.hpp"

using namespace fermice;
using namespace fermice::ice;
using ring::MultiPoly;

namespace {

MultiPoly P(const char* s) { return ring::parse_poly(s); }

std::vector<std::vector<int>> as_int(const Bits& b) {
  std::vector<std::vector<int>> out;
  for (const auto& row : b) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("vertex types") {
  int admissible = 0;
  for (int m = 0; m < 16; ++m) {
    const auto t = vertex_type(m & 1, m & 2, m & 4, m & 8);
    if (t) ++admissible;
  }
  CHECK(admissible == 6);
  CHECK(vertex_type(true, true, false, false) == 1);
  CHECK(vertex_type(false, false, true, true) == 2);
  CHECK(vertex_type(true, true, true, true) == 3);
  CHECK(vertex_type(false, false, false, false) == 4);
  CHECK(vertex_type(false, true, false, true) == 5);
  CHECK(vertex_type(true, false, true, false) == 6);
}

TEST_CASE("the three-row example state") {
  const IceState s = pattern_to_ice(GTPattern{{{5, 3, 2}, {4, 3}, {3}}});
  CHECK(s.rows == 3);
  CHECK(s.cols == 5);
  // Horizontal edges read from the displayed state, left boundary first.
  CHECK(as_int(s.horizontal) == std::vector<std::vector<int>>{
                                    {1, 0, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}});
  CHECK(as_int(s.vertical) == std::vector<std::vector<int>>{{1, 0, 1, 1, 0},
                                                            {0, 1, 1, 0, 0},
                                                            {0, 0, 1, 0, 0},
                                                            {0, 0, 0, 0, 0}});
  CHECK(row_weight(s, 3, WeightScheme::delta()) == P("x3^2*(t3+1)"));
  CHECK(row_weight(s, 3, WeightScheme::gamma()) == P("x1^2*(t1+1)*t1"));
  CHECK(state_weight(s, WeightScheme::ones()) == MultiPoly(1L));
  CHECK(row_identities_hold(s));
}

TEST_CASE("single column") {
  const auto states = enumerate_states({1});
  REQUIRE(states.size() == 1);
  CHECK(states[0].vertical[0][0] == 1);
  CHECK(states[0].vertical[1][0] == 0);
  CHECK(partition_function({1}, WeightScheme::delta()) == MultiPoly(1L));
}

TEST_CASE("state counts") {
  CHECK(enumerate_states({2, 1}).size() == 2);
  CHECK(enumerate_states({3, 1}).size() == 3);
  CHECK(partition_function({2, 1}, WeightScheme::ones()) == MultiPoly(2L));
  CHECK(partition_function({2, 1}, WeightScheme::delta()) == P("x1 + t2*x2"));
}

TEST_CASE("enumeration agrees with brute-force edge search") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : strict_partitions(n, 5)) {
      const auto states = enumerate_states(lambda);
      const auto brute = testing::brute_force_ice(lambda);
      CHECK(states.size() == brute.size());
      CHECK(states.size() == strict_gt_patterns(lambda).size());
      std::vector<std::vector<std::vector<int>>> mine;
      for (const auto& s : states) {
        CHECK(is_admissible(s));
        mine.push_back(as_int(s.vertical));
      }
      std::sort(mine.begin(), mine.end());
      auto sorted = brute;
      std::sort(sorted.begin(), sorted.end());
      CHECK(mine == sorted);
    }
  }
}

TEST_CASE("bijection round trip and type frequencies") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : strict_partitions(n, 5)) {
      for (const auto& p : strict_gt_patterns(lambda)) {
        const IceState s = pattern_to_ice(p);
        CHECK(ice_to_pattern(s) == p);
        CHECK(type_histogram(pattern_to_ice(ice_to_pattern(s))) == type_histogram(s));
        int total = 0;
        for (int k = 1; k <= 6; ++k) total += type_histogram(s)[static_cast<std::size_t>(k)];
        CHECK(total == s.rows * s.cols);
      }
    }
  }
}

TEST_CASE("bijectivity up to four rows") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : strict_partitions(n, 6)) {
      CHECK(enumerate_states(lambda).size() == strict_gt_patterns(lambda).size());
    }
  }
}

TEST_CASE("row identities and the global identity") {
  for (int n = 1; n <= 3; ++n) {
    const auto vars = evolution::default_vars(n);
    for (const auto& lambda : strict_partitions(n, 5)) {
      for (const auto& s : enumerate_states(lambda)) CHECK(row_identities_hold(s));
      MultiPoly pref(1L);
      for (int i = 1; i <= n; ++i) {
        MultiPoly f = (ring::T(i) + 1L) * ring::X(i);
        pref *= i % 2 == 0 ? f : -f;
      }
      CHECK(pref * partition_function(lambda, WeightScheme::delta()) ==
            evolution::factorized_bracket(lambda, evolution::Direction::plus, vars));
    }
  }
}

TEST_CASE("inadmissible states are rejected") {
  IceState s = pattern_to_ice(GTPattern{{{2, 1}, {1}}});
  s.horizontal[0][1] ^= 1;
  CHECK_FALSE(is_admissible(s));
  CHECK_THROWS_AS(ice_to_pattern(s), std::invalid_argument);
  CHECK_THROWS_AS(pattern_to_ice(GTPattern{{{2, 1}, {3}}}), std::invalid_argument);
}

TEST_CASE("calibration") {
  const auto d = calibrate_delta(2, 4, false);
  CHECK(d.permutations_tried == 720);
  CHECK(d.distinct_tables == 120);
  CHECK(d.transcribed_consistent);
  const auto g = calibrate_gamma(2, 4);
  CHECK(g.distinct_tables == 180);
  CHECK(g.transcribed_consistent);
  MESSAGE("delta: example ", d.matching_example, ", consistent ", d.consistent,
          "; gamma: example ", g.matching_example, ", consistent ", g.consistent);
}

TEST_CASE("json round trip") {
  for (const auto& s : enumerate_states({4, 2, 1})) {
    CHECK(state_from_json(state_to_json(s)) == s);
  }
  auto j = state_to_json(enumerate_states({2, 1})[0]);
  j["pattern"] = std::vector<StrictPartition>{{2, 1}, {2}};
  if (j["pattern"] == state_to_json(enumerate_states({2, 1})[0])["pattern"]) {
    j["pattern"] = std::vector<StrictPartition>{{2, 1}, {1}};
  }
  CHECK_THROWS_AS(state_from_json(j), std::invalid_argument);
  const GTPattern p{{{3, 1}, {2}}};
  CHECK(pattern_from_json(pattern_to_json(p)) == p);
}

TEST_CASE("the displayed bend state") {
  const BendIceState s = example_bend_state();
  CHECK(s.bend_up == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(as_int(s.horizontal) == std::vector<std::vector<int>>{{1, 0, 1, 0, 0, 0},
                                                              {1, 1, 1, 1, 0, 1},
                                                              {1, 1, 0, 1, 1, 1},
                                                              {1, 1, 1, 0, 1, 0},
                                                              {1, 1, 1, 1, 0, 0},
                                                              {1, 1, 1, 1, 1, 1}});
  CHECK(length_dichotomy_holds(s));
  CHECK(bend_state_from_json(bend_state_to_json(s)) == s);
  const auto all = enumerate_nn_states({5, 3, 2});
  CHECK(std::find(all.begin(), all.end(), s) != all.end());
  for (int i = 1; i <= 3; ++i) CHECK(nn_row_factorization_check(s, i, ring::T(1)));
}

TEST_CASE("bend enumeration") {
  for (const auto& s : enumerate_nn_states({1})) CHECK(length_dichotomy_holds(s));
  for (const StrictPartition& lambda :
       {StrictPartition{1}, StrictPartition{2, 1}, StrictPartition{3, 1}, StrictPartition{4, 2, 1}}) {
    const auto states = enumerate_nn_states(lambda);
    const auto patterns = testing::bend_patterns(lambda);
    REQUIRE(states.size() == patterns.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
      CHECK(bend_levels(states[k]) == patterns[k]);
      CHECK(length_dichotomy_holds(states[k]));
    }
  }
}

TEST_CASE("bend row factorization") {
  const MultiPoly t = ring::T(1);
  for (const StrictPartition& lambda : {StrictPartition{1}, StrictPartition{2, 1},
                                        StrictPartition{3, 1}, StrictPartition{3, 2, 1}}) {
    for (const auto& s : enumerate_nn_states(lambda)) {
      for (int i = 1; i <= s.pairs; ++i) {
        const RowPairBrackets b = nn_row_brackets(s, i, t);
        CHECK(b.scaled_weight == b.scaled_product);
        if (s.bend_up[static_cast<std::size_t>(s.pairs - i)] != 0) {
          CHECK(b.a2.is_zero());
          CHECK(b.b2.is_zero());
        } else {
          CHECK(b.a1.is_zero());
          CHECK(b.b1.is_zero());
        }
      }
    }
  }
}
