// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fermice/ring/io.hpp"
#include "fermice/symfun/symfun.hpp"
#include "oracles.hpp"

using namespace fermice;
using namespace fermice::symfun;

namespace {

MultiPoly P(const char* s) { return ring::parse_poly(s); }

}  // namespace

TEST_CASE("complete and elementary polynomials") {
  CHECK(complete_h(0, AlphabetPair::vars(2)) == MultiPoly(1L));
  CHECK(complete_h(-2, AlphabetPair::vars(2)).is_zero());
  CHECK(complete_h(1, AlphabetPair::vars(2)) == P("x1 + x2"));
  CHECK(complete_h(2, AlphabetPair::vars(1, 1)) == P("x1^2 + x1*y1"));
  const std::vector<MultiPoly> y = {ring::Y(1), ring::Y(2), ring::Y(3)};
  CHECK(elementary_e(0, y) == MultiPoly(1L));
  CHECK(elementary_e(2, y) == P("y1*y2 + y1*y3 + y2*y3"));
  CHECK(elementary_e(4, {ring::Y(1), ring::Y(2)}).is_zero());
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(complete_h(k, AlphabetPair::vars(n)) == testing::monomial_sum_h(k, n));
    }
  }
}

TEST_CASE("h table matches single evaluations") {
  const auto a = AlphabetPair::vars(2, 2);
  const auto table = complete_h_table(5, a);
  REQUIRE(table.size() == 6);
  for (int k = 0; k <= 5; ++k) CHECK(table[static_cast<std::size_t>(k)] == complete_h(k, a));
}

TEST_CASE("super h generating series") {
  const ring::SeriesTruncation trunc = ring::SeriesTruncation::on(ring::VarClass::z, 5);
  const auto a = AlphabetPair::vars(2, 2);
  std::vector<ring::SeriesFactor> factors;
  for (const auto& x : a.x) factors.push_back({MultiPoly(1L), MultiPoly(1L) - ring::Z(1) * x});
  MultiPoly series = ring::series_expand(factors, trunc);
  for (const auto& y : a.y) series = ring::series_mul(series, MultiPoly(1L) + ring::Z(1) * y, trunc);
  MultiPoly sum;
  for (int k = 0; k <= 5; ++k) sum += complete_h(k, a) * ring::Z(1).pow(static_cast<unsigned>(k));
  CHECK(sum == series);
}

TEST_CASE("schur examples") {
  const auto a = AlphabetPair::vars(2);
  CHECK(schur_jt({1}, a) == P("x1 + x2"));
  CHECK(schur_jt({2, 1}, a) == P("x1^2*x2 + x1*x2^2"));
  CHECK(schur_jt({1}, {1}, a) == MultiPoly(1L));
  CHECK(schur_tableaux({2, 1}, {}, a.x) == P("x1^2*x2 + x1*x2^2"));
  CHECK(schur_tableaux({2}, {1}, a.x) == P("x1 + x2"));
  CHECK(schur_jt({1}, {2}, a).is_zero());
  CHECK(schur_tableaux({1}, {2}, a.x).is_zero());
}

TEST_CASE("determinant, tableaux, and alternant ratio agree") {
  for (int n = 1; n <= 3; ++n) {
    const auto a = AlphabetPair::vars(n);
    for (const auto& lambda : partitions_in_box(3, 4)) {
      const MultiPoly jt = schur_jt(lambda, a);
      CHECK(jt == schur_tableaux(lambda, {}, a.x));
      CHECK(jt == testing::bialternant_schur(lambda, n));
      for (const auto& mu : partitions_in_box(3, 4)) {
        CHECK(schur_jt(lambda, mu, a) == schur_tableaux(lambda, mu, a.x));
      }
    }
  }
}

TEST_CASE("super schur at y = 0") {
  const auto a = AlphabetPair::vars(2, 2);
  const std::map<ring::VarId, MultiPoly> zero = {{ring::VarId::y(1), MultiPoly{}}, {ring::VarId::y(2), MultiPoly{}}};
  for (const auto& lambda : partitions_in_box(2, 3)) {
    CHECK(schur_jt(lambda, a).substitute(zero) == schur_jt(lambda, AlphabetPair::vars(2)));
  }
}

TEST_CASE("pieri rule for elementary polynomials") {
  CHECK(pieri_e({}, 1, 3) == std::vector<Partition>{Partition{1}});
  CHECK(pieri_e({1}, 1, 3) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(pieri_e({1}, 2, 3) == std::vector<Partition>{Partition{2, 1}, Partition{1, 1, 1}});
  const auto a = AlphabetPair::vars(3);
  for (int size = 0; size <= 4; ++size) {
    for (const auto& nu : partitions_of(size)) {
      for (int i = 0; i <= 3; ++i) {
        MultiPoly sum;
        for (const auto& mu : pieri_e(nu, i, 3)) sum += testing::bialternant_schur(mu, 3);
        CHECK(sum == testing::bialternant_schur(nu, 3) * elementary_e(i, a.x));
      }
    }
  }
}

TEST_CASE("cauchy determinant") {
  CHECK(cauchy_check(1, ring::SeriesTruncation::on(ring::VarClass::z, 3)));
  CHECK(cauchy_check(2, ring::SeriesTruncation::on(ring::VarClass::z, 4)));
  CHECK(cauchy_check(3, ring::SeriesTruncation::on(ring::VarClass::z, 5)));
}
