// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ring/series.hpp"

#include <stdexcept>

namespace fermice::ring {

std::optional<int> SeriesTruncation::cap(VarClass c) const {
  auto it = caps.find(c);
  if (it == caps.end()) return std::nullopt;
  return it->second;
}

bool SeriesTruncation::keeps(const Monomial& m) const {
  for (const auto& [cls, limit] : caps) {
    if (m.degree_in(cls) > limit) return false;
  }
  return true;
}

MultiPoly truncate(const MultiPoly& p, const SeriesTruncation& trunc) {
  return p.filter([&](const Monomial& m) { return trunc.keeps(m); });
}

MultiPoly series_mul(const MultiPoly& a, const MultiPoly& b, const SeriesTruncation& trunc) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      if (trunc.keeps(m)) out.add_term(m, ca * cb);
    }
  }
  return out;
}

namespace {

// Positive degree in some capped class and negative degree in none, so that
// powers eventually leave the truncation window.
bool grows(const Monomial& m, const SeriesTruncation& trunc) {
  bool positive = false;
  for (const auto& [cls, limit] : trunc.caps) {
    const int d = m.degree_in(cls);
    if (d < 0) return false;
    if (d > 0) positive = true;
  }
  return positive;
}

void require_growing(const MultiPoly& u, const SeriesTruncation& trunc, const char* what) {
  for (const auto& [m, c] : u.terms()) {
    if (!grows(m, trunc)) {
      throw std::invalid_argument(std::string(what) + ": term " + m.to_string() +
                                  " has no positive degree in a capped class");
    }
  }
}

}  // namespace

MultiPoly series_geometric(const MultiPoly& u, const SeriesTruncation& trunc) {
  require_growing(u, trunc, "series_geometric");
  MultiPoly sum(1L);
  MultiPoly power(1L);
  while (true) {
    power = series_mul(power, u, trunc);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

MultiPoly series_expand(const std::vector<SeriesFactor>& factors, const SeriesTruncation& trunc) {
  MultiPoly result(1L);
  for (const auto& f : factors) {
    const MultiPoly u = MultiPoly(1L) - f.denominator;
    if (f.denominator.coefficient(Monomial{}) != 1 || u.size() != 1) {
      throw std::invalid_argument("series_expand: denominator must have the form 1 - c*m, got " +
                                  f.denominator.to_string());
    }
    result = series_mul(result, truncate(f.numerator, trunc), trunc);
    result = series_mul(result, series_geometric(u, trunc), trunc);
  }
  return result;
}

MultiPoly series_exp(const MultiPoly& p, const SeriesTruncation& trunc) {
  if (p.constant_term() != 0) throw std::invalid_argument("series_exp: nonzero constant term");
  require_growing(p, trunc, "series_exp");
  const MultiPoly q = truncate(p, trunc);
  MultiPoly sum(1L);
  MultiPoly term(1L);
  for (long k = 1;; ++k) {
    term = series_mul(term, q, trunc) * Scalar(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

MultiPoly coefficient_extract(const MultiPoly& p, const Monomial& pattern) {
  const Monomial want = pattern.restricted_to(VarClass::z);
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.restricted_to(VarClass::z) == want) out.add_term(m.without(VarClass::z), c);
  }
  return out;
}

}  // namespace fermice::ring
